#include "tachsim/duality.hpp"

#include <cmath>
#include <string>

#include "tachsim/analytic.hpp"
#include "tachsim/errors.hpp"
#include "tachsim/fft.hpp"

namespace tachsim::duality {

namespace {

const Complex kI(0.0, 1.0);

void require_uniform(const std::vector<double>& v, const char* name) {
  if (v.size() < 5) throw ResolutionError(std::string(name) + " axis needs >= 5 points");
  const double h = v[1] - v[0];
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (std::abs((v[i + 1] - v[i]) - h) > 1e-9 * std::abs(h)) {
      throw ConfigError(std::string(name) + " axis is not uniformly spaced");
    }
  }
}

// U = (I + i sigma_x)/sqrt(2); applies U^{-1} = (I - i sigma_x)/sqrt(2).
void apply_u_inverse(Complex& a, Complex& b) {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex na = s * (a - kI * b);
  const Complex nb = s * (b - kI * a);
  a = na;
  b = nb;
}

} // namespace

SpacetimeSolution dual_transform(const SpacetimeSolution& in) {
  if (in.params.mass_type != MassType::normal) {
    throw ConfigError("dual_transform expects a normal-mass input solution");
  }
  if (in.n_x() != in.n_t()) {
    throw ConfigError("dual_transform requires a square lattice, got " +
                      std::to_string(in.n_x()) + " x " + std::to_string(in.n_t()));
  }
  for (std::size_t i = 0; i < in.n_x(); ++i) {
    if (std::abs(in.xs[i] - in.ts[i]) > 1e-9) {
      throw ConfigError("dual_transform requires coinciding x and t coordinates");
    }
  }
  if (in.potential_axis != Axis::space) {
    throw ConfigError("dual_transform input potentials must depend on x");
  }

  const std::size_t n = in.n_x();
  SpacetimeSolution out;
  out.xs = in.ts;
  out.ts = in.xs;
  out.params = DiracParams{in.params.mass, MassType::tachyon, 0.0};
  out.up.resize(n * n);
  out.down.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex a = in.at_up(j, k); // psi(x = t'_k, t = x'_j)
      Complex b = in.at_down(j, k);
      apply_u_inverse(a, b);
      out.up[k * n + j] = a;
      out.down[k * n + j] = b;
    }
  }

  out.phi.resize(n);
  out.avec.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.phi[i] = in.avec.empty() ? 0.0 : -in.avec[i];
    out.avec[i] = in.phi.empty() ? 0.0 : -in.phi[i];
  }
  out.potential_axis = Axis::time;
  out.spectral_axis =
      in.spectral_axis == Axis::space ? Axis::time : Axis::space;
  return out;
}

double equation_residual(const SpacetimeSolution& sol) {
  require_uniform(sol.xs, "x");
  require_uniform(sol.ts, "t");
  const std::size_t nx = sol.n_x();
  const std::size_t nt = sol.n_t();
  const double hx = sol.dx();
  const double ht = sol.dt();
  const Complex mass = mass_term(sol.params);

  // dt psi: spectral over columns if the time axis is the periodic one,
  // else 5-point finite differences; dx psi the other way around.
  const bool spectral_in_t = sol.spectral_axis == Axis::time;

  std::vector<Complex> dt_up(nt * nx), dt_down(nt * nx);
  std::vector<Complex> dx_up(nt * nx), dx_down(nt * nx);

  auto fd5 = [](const std::vector<Complex>& f, std::size_t stride, std::size_t i,
                double h) {
    return (-f[i + 2 * stride] + 8.0 * f[i + stride] - 8.0 * f[i - stride] +
            f[i - 2 * stride]) /
           (12.0 * h);
  };

  if (spectral_in_t) {
    std::vector<Complex> col(nt);
    for (std::size_t j = 0; j < nx; ++j) {
      for (int comp = 0; comp < 2; ++comp) {
        const auto& src = comp == 0 ? sol.up : sol.down;
        auto& dst = comp == 0 ? dt_up : dt_down;
        for (std::size_t k = 0; k < nt; ++k) col[k] = src[k * nx + j];
        fft::derivative(col, ht);
        for (std::size_t k = 0; k < nt; ++k) dst[k * nx + j] = col[k];
      }
    }
    for (std::size_t k = 0; k < nt; ++k) {
      for (std::size_t j = 2; j + 2 < nx; ++j) {
        dx_up[k * nx + j] = fd5(sol.up, 1, k * nx + j, hx);
        dx_down[k * nx + j] = fd5(sol.down, 1, k * nx + j, hx);
      }
    }
  } else {
    std::vector<Complex> row(nx);
    for (std::size_t k = 0; k < nt; ++k) {
      for (int comp = 0; comp < 2; ++comp) {
        const auto& src = comp == 0 ? sol.up : sol.down;
        auto& dst = comp == 0 ? dx_up : dx_down;
        for (std::size_t j = 0; j < nx; ++j) row[j] = src[k * nx + j];
        fft::derivative(row, hx);
        for (std::size_t j = 0; j < nx; ++j) dst[k * nx + j] = row[j];
      }
    }
    for (std::size_t j = 0; j < nx; ++j) {
      for (std::size_t k = 2; k + 2 < nt; ++k) {
        dt_up[k * nx + j] = fd5(sol.up, nx, k * nx + j, ht);
        dt_down[k * nx + j] = fd5(sol.down, nx, k * nx + j, ht);
      }
    }
  }

  const std::size_t k_lo = spectral_in_t ? 0 : 2;
  const std::size_t k_hi = spectral_in_t ? nt : nt - 2;
  const std::size_t j_lo = spectral_in_t ? 2 : 0;
  const std::size_t j_hi = spectral_in_t ? nx - 2 : nx;

  double worst = 0.0;
  for (std::size_t k = k_lo; k < k_hi; ++k) {
    for (std::size_t j = j_lo; j < j_hi; ++j) {
      const std::size_t i = k * nx + j;
      const double a_pot = sol.avec.empty()
                               ? 0.0
                               : sol.avec[sol.potential_axis == Axis::space ? j : k];
      const double phi_pot = sol.phi.empty()
                                 ? 0.0
                                 : sol.phi[sol.potential_axis == Axis::space ? j : k];
      // (p - A) sigma_x psi with p = -i d/dx
      const Complex px_u = -kI * dx_up[i] - a_pot * sol.up[i];
      const Complex px_d = -kI * dx_down[i] - a_pot * sol.down[i];
      const Complex h_up = px_d + mass * sol.up[i] + phi_pot * sol.up[i];
      const Complex h_down = px_u - mass * sol.down[i] + phi_pot * sol.down[i];
      const Complex r_up = kI * dt_up[i] - h_up;
      const Complex r_down = kI * dt_down[i] - h_down;
      worst = std::max({worst, std::abs(r_up), std::abs(r_down)});
    }
  }
  return worst;
}

SpacetimeSolution plane_wave_solution(std::size_t n, double extent, double p,
                                      const DiracParams& params) {
  const SpatialGrid grid(n, extent);
  const auto e = analytic::dispersion(p, params);
  const Spinor u = analytic::eigenspinor(p, params, analytic::Branch::plus);

  SpacetimeSolution sol;
  sol.params = params;
  sol.xs.resize(n);
  sol.ts.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    sol.xs[i] = grid.x(i);
    sol.ts[i] = grid.x(i);
  }
  sol.up.resize(n * n);
  sol.down.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex phase = std::exp(kI * (p * sol.xs[j] - e.plus * sol.ts[k]));
      sol.up[k * n + j] = phase * u[0];
      sol.down[k * n + j] = phase * u[1];
    }
  }
  sol.phi.assign(n, 0.0);
  sol.avec.assign(n, 0.0);
  return sol;
}

SpacetimeSolution record_lattice(const SpinorField& initial,
                                 const EvolutionConfig& config,
                                 std::size_t n_rows, std::size_t record_stride,
                                 bool relabel_time) {
  const SpatialGrid& grid = initial.grid;
  const std::size_t nx = grid.n_points();
  Evolver ev(grid, config.params, config.dt);

  SpacetimeSolution sol;
  sol.params = config.params;
  sol.xs.resize(nx);
  for (std::size_t j = 0; j < nx; ++j) sol.xs[j] = grid.x(j);
  sol.ts.resize(n_rows);
  sol.up.resize(n_rows * nx);
  sol.down.resize(n_rows * nx);

  SpinorField f = initial;
  for (std::size_t k = 0; k < n_rows; ++k) {
    sol.ts[k] = relabel_time
                    ? sol.xs[k]
                    : static_cast<double>(k * record_stride) * config.dt;
    for (std::size_t j = 0; j < nx; ++j) {
      sol.up[k * nx + j] = f.up[j];
      sol.down[k * nx + j] = f.down[j];
    }
    if (k + 1 < n_rows) {
      for (std::size_t s = 0; s < record_stride; ++s) ev.advance(f);
    }
  }

  sol.phi.resize(nx);
  sol.avec.assign(nx, 0.0);
  for (std::size_t j = 0; j < nx; ++j) {
    sol.phi[j] = config.params.potential_slope * sol.xs[j];
  }
  return sol;
}

} // namespace tachsim::duality
