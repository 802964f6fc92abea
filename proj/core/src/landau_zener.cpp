#include "tachsim/landau_zener.hpp"

#include <cmath>
#include <string>

#include "tachsim/errors.hpp"

namespace tachsim::lz {

namespace {

void validate(const LZConfig& c) {
  const double m = c.params.mass;
  if (!(c.g > 0.0)) throw ConfigError("LZ ramp rate g must be positive");
  if (!(c.p_start > m)) {
    throw ConfigError("LZ requires p_start > m, got p_start = " +
                      std::to_string(c.p_start));
  }
  if (!(c.p_end < -m)) {
    throw ConfigError("LZ requires p_end < -m, got p_end = " +
                      std::to_string(c.p_end));
  }
}

double auto_dt(const LZConfig& c) {
  const double h_max = std::hypot(std::max(std::abs(c.p_start), std::abs(c.p_end)),
                                  c.params.mass);
  // Local error <= 1e-10 per unit time and |dH/dt| dt^2 <= 1e-10.
  const double tol = 1e-10;
  const double dt_rk = std::pow(tol, 0.25) / std::pow(h_max, 1.25);
  const double dt_ramp = std::sqrt(tol / c.g);
  return std::min({1e-3, dt_rk, dt_ramp});
}

struct Rhs {
  double p_start, g;
  Complex mass_diag;

  void operator()(double t, const Spinor& s, Spinor& out) const {
    const double b = p_start - g * t;
    // -i H xi with H = [[a, b], [b, -a]]
    out[0] = Complex(0.0, -1.0) * (mass_diag * s[0] + b * s[1]);
    out[1] = Complex(0.0, -1.0) * (b * s[0] - mass_diag * s[1]);
  }
};

} // namespace

TwoLevelState lz_evolve(const LZConfig& config, analytic::Branch initial_branch) {
  validate(config);
  const double dt_req = config.dt > 0.0 ? config.dt : auto_dt(config);
  const double t_total = (config.p_start - config.p_end) / config.g;
  const std::size_t n = static_cast<std::size_t>(std::ceil(t_total / dt_req));
  const double dt = t_total / static_cast<double>(n);

  const Rhs rhs{config.p_start, config.g, mass_term(config.params)};
  Spinor y = analytic::eigenspinor(config.p_start, config.params, initial_branch);

  Spinor k1, k2, k3, k4, tmp;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * dt;
    rhs(t, y, k1);
    tmp = {y[0] + 0.5 * dt * k1[0], y[1] + 0.5 * dt * k1[1]};
    rhs(t + 0.5 * dt, tmp, k2);
    tmp = {y[0] + 0.5 * dt * k2[0], y[1] + 0.5 * dt * k2[1]};
    rhs(t + 0.5 * dt, tmp, k3);
    tmp = {y[0] + dt * k3[0], y[1] + dt * k3[1]};
    rhs(t + dt, tmp, k4);
    y[0] += dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    y[1] += dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
  }

  TwoLevelState out;
  out.amplitudes = y;
  out.time = t_total;
  out.instantaneous_p = config.p_end;
  return out;
}

BranchPopulations branch_populations(const TwoLevelState& state,
                                     const DiracParams& params) {
  const double p = state.instantaneous_p;
  if (params.mass_type == MassType::tachyon && std::abs(p) <= params.mass) {
    throw ComplexBandError("branch populations undefined inside the complex band");
  }
  const Spinor up = analytic::eigenspinor(p, params, analytic::Branch::plus);
  const Spinor um = analytic::eigenspinor(p, params, analytic::Branch::minus);
  const Spinor& xi = state.amplitudes;

  auto transpose_dot = [](const Spinor& a, const Spinor& b) {
    return a[0] * b[0] + a[1] * b[1];
  };
  const Complex np = transpose_dot(up, up);
  const Complex nm = transpose_dot(um, um);
  if (std::abs(np) < 1e-12 || std::abs(nm) < 1e-12) {
    throw ExceptionalPointError("biorthogonal norm vanishes (exceptional point)");
  }
  const Complex cp = transpose_dot(up, xi) / np;
  const Complex cm = transpose_dot(um, xi) / nm;

  const double wp = std::norm(cp); // right vectors are unit-norm
  const double wm = std::norm(cm);
  BranchPopulations pops;
  pops.plus = wp / (wp + wm);
  pops.minus = wm / (wp + wm);
  return pops;
}

double lz_tunnel_probability(const LZConfig& config) {
  const TwoLevelState end = lz_evolve(config, analytic::Branch::plus);
  return branch_populations(end, config.params).minus;
}

} // namespace tachsim::lz
