#include "tachsim/observables.hpp"

#include <cmath>

#include "tachsim/errors.hpp"
#include "tachsim/fft.hpp"

namespace tachsim {

ObservableRecord observables(const SpinorField& field) {
  const auto& g = field.grid;
  const std::size_t n = g.n_points();
  const double dx = g.dx();

  double dens_sum = 0.0, x_sum = 0.0, sz_sum = 0.0, xsz_sum = 0.0;
  double sx_sum = 0.0, sy_sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double du = std::norm(field.up[j]);
    const double dd = std::norm(field.down[j]);
    const double x = g.x(j);
    const Complex cross = std::conj(field.up[j]) * field.down[j];
    dens_sum += du + dd;
    x_sum += x * (du + dd);
    sz_sum += du - dd;
    xsz_sum += x * (du - dd);
    sx_sum += 2.0 * cross.real();
    sy_sum += 2.0 * cross.imag();
  }

  const double raw_norm_sq = dens_sum * dx;
  if (!(raw_norm_sq > 0.0) || !std::isfinite(raw_norm_sq)) {
    throw DegenerateStateError("observables on a zero-norm or non-finite field");
  }

  ObservableRecord rec;
  rec.norm_sq = raw_norm_sq;
  rec.mean_x = x_sum / dens_sum;
  rec.mean_sigma_x = sx_sum / dens_sum;
  rec.mean_sigma_y = sy_sum / dens_sum;
  rec.mean_sigma_z = sz_sum / dens_sum;
  rec.correlation_xz = xsz_sum / dens_sum - rec.mean_x * rec.mean_sigma_z;

  // <p> on the momentum grid; Parseval handles normalization.
  std::vector<Complex> fu = field.up;
  std::vector<Complex> fd = field.down;
  fft::forward(fu);
  fft::forward(fd);
  double p_weight = 0.0, p_sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double w = std::norm(fu[k]) + std::norm(fd[k]);
    p_weight += w;
    p_sum += g.momentum(k) * w;
  }
  rec.mean_p = p_sum / p_weight;
  return rec;
}

} // namespace tachsim
