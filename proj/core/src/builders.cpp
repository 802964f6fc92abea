#include "tachsim/builders.hpp"

#include <cmath>
#include <string>

#include "tachsim/analytic.hpp"
#include "tachsim/errors.hpp"
#include "tachsim/fft.hpp"

namespace tachsim {

SpinorField gaussian_packet(const SpatialGrid& grid, double p_o, double width,
                            const Spinor& spinor, double center) {
  if (!(width > 0.0)) throw ConfigError("packet width must be positive");

  const double half = 0.5 * grid.extent();
  const double tail_r = std::exp(-std::pow(half - center, 2) / (4.0 * width * width));
  const double tail_l = std::exp(-std::pow(half + center, 2) / (4.0 * width * width));
  if (tail_r > 1e-12 || tail_l > 1e-12) {
    throw DomainTooSmallError("gaussian packet clipped by the grid boundary");
  }

  const double sn = std::sqrt(spinor_norm_sq(spinor));
  SpinorField field(grid);
  for (std::size_t j = 0; j < grid.n_points(); ++j) {
    const double x = grid.x(j) - center;
    const Complex amp =
        std::polar(std::exp(-x * x / (4.0 * width * width)), p_o * grid.x(j));
    field.up[j] = amp * spinor[0] / sn;
    field.down[j] = amp * spinor[1] / sn;
  }
  field.normalize();
  return field;
}

SpinorField positive_energy_packet(const SpatialGrid& grid, double p_o,
                                   double width, const DiracParams& params,
                                   double center) {
  if (!(width > 0.0)) throw ConfigError("packet width must be positive");

  const std::size_t n = grid.n_points();
  const bool tach = params.mass_type == MassType::tachyon;
  const double band = params.mass; // |p| <= m excluded for tachyons

  double total_w = 0.0, excluded_w = 0.0;
  std::vector<double> envelope(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double p = grid.momentum(k);
    const double gpk = std::exp(-width * width * (p - p_o) * (p - p_o));
    envelope[k] = gpk;
    total_w += gpk * gpk;
    if (tach && std::abs(p) <= band) excluded_w += gpk * gpk;
  }
  if (tach && excluded_w > 1e-8 * total_w) {
    throw IllConditionedPacketError(
        "complex-band weight " + std::to_string(excluded_w / total_w) +
        " exceeds 1e-8; increase p_o or width");
  }

  SpinorField field(grid);
  std::vector<Complex> fu(n), fd(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double p = grid.momentum(k);
    if (tach && std::abs(p) <= band) continue;
    if (params.mass == 0.0 && p == 0.0) continue; // massless zero mode is degenerate
    const Spinor u = analytic::eigenspinor(p, params, analytic::Branch::plus);
    // (-1)^k re-centers the inverse transform on x_j = (j - n/2) dx,
    // e^{-i p center} shifts the packet.
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const Complex amp = envelope[k] * sign * std::polar(1.0, -p * center);
    fu[k] = amp * u[0];
    fd[k] = amp * u[1];
  }
  fft::inverse(fu);
  fft::inverse(fd);
  field.up = std::move(fu);
  field.down = std::move(fd);
  field.normalize();
  return field;
}

} // namespace tachsim
