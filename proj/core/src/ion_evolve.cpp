#include <algorithm>
#include <cmath>
#include <string>

#include "ion_detail.hpp"
#include "tachsim/errors.hpp"
#include "tachsim/ion.hpp"

namespace tachsim::ion {

namespace detail {

namespace {
constexpr double kTruncationLimit = 1e-6;
}

NaturalDrive NaturalDrive::from(const IonParams& p) {
  const double tu = 1.0 / (2.0 * p.eta * p.omega_tilde);
  NaturalDrive d;
  d.omt = p.omega_tilde * tu;
  d.nu = p.nu * tu;
  d.eta = p.eta;
  d.sin_phi = std::sin(p.phi);
  d.cos_phi = std::cos(p.phi);
  const double delta_n = p.delta * tu;
  d.delta_red = -d.nu - 2.0 * delta_n;
  d.delta_blue = d.nu - 2.0 * delta_n;
  d.gamma = p.gamma * tu;
  d.gamma_d = p.gamma_d_value() * tu;
  d.single_delta = delta_n;
  return d;
}

// out += coef_minus * (sigma- B psi) + coef_plus * (sigma+ B psi), with
// B = sin(phi) + eta cos(phi) (a e^{-i nu t} + a^dag e^{i nu t}).
void add_spin_flip_terms(const IonState& in, IonState& out, const NaturalDrive& d,
                         double t, Complex coef_minus, Complex coef_plus) {
  const std::size_t nl = in.n_levels;
  const Complex wa = d.eta * d.cos_phi * std::polar(1.0, -d.nu * t);
  const Complex wad = d.eta * d.cos_phi * std::polar(1.0, d.nu * t);
  const double wc = d.sin_phi;
  for (std::size_t n = 0; n < nl; ++n) {
    Complex bu = wc * in.amp(0, n);
    Complex bd = wc * in.amp(1, n);
    if (n + 1 < nl) {
      const double r = std::sqrt(static_cast<double>(n + 1));
      bu += wa * r * in.amp(0, n + 1);
      bd += wa * r * in.amp(1, n + 1);
    }
    if (n > 0) {
      const double r = std::sqrt(static_cast<double>(n));
      bu += wad * r * in.amp(0, n - 1);
      bd += wad * r * in.amp(1, n - 1);
    }
    out.amp(1, n) += coef_minus * bu; // sigma- : |down><up|
    out.amp(0, n) += coef_plus * bd;  // sigma+ : |up><down|
  }
}

void apply_single_sideband(const IonState& in, IonState& out, const NaturalDrive& d,
                           double t, double delta) {
  const Complex iw = Complex(0.0, d.omt);
  const Complex f = std::polar(1.0, delta * t);
  add_spin_flip_terms(in, out, d, t, iw * f, -iw * std::conj(f));
}

// Red + blue pair: H_o(delta_red) - H_o(delta_blue). The fused spin factor
// is F(t) = e^{i delta_red t} - e^{i delta_blue t}.
void apply_drive(const IonState& in, IonState& out, const NaturalDrive& d, double t) {
  const Complex iw = Complex(0.0, d.omt);
  const Complex f = std::polar(1.0, d.delta_red * t) - std::polar(1.0, d.delta_blue * t);
  add_spin_flip_terms(in, out, d, t, iw * f, -iw * std::conj(f));
}

// out = -i H_drive(t) psi - (gamma_total/2) P_up psi
void conditioned_rhs(const IonState& in, IonState& out, const NaturalDrive& d,
                     double t, double gamma_total) {
  std::fill(out.amps.begin(), out.amps.end(), Complex(0.0, 0.0));
  apply_drive(in, out, d, t);
  for (auto& z : out.amps) z *= Complex(0.0, -1.0);
  const double damp = 0.5 * gamma_total;
  for (std::size_t n = 0; n < in.n_levels; ++n) {
    out.amp(0, n) -= damp * in.amp(0, n);
  }
}

void rk4_step(IonState& y, double t, double dt, const NaturalDrive& d,
              double gamma_total, IonState& k1, IonState& k2, IonState& k3,
              IonState& k4, IonState& tmp) {
  const std::size_t n = y.amps.size();
  conditioned_rhs(y, k1, d, t, gamma_total);
  for (std::size_t i = 0; i < n; ++i) tmp.amps[i] = y.amps[i] + 0.5 * dt * k1.amps[i];
  conditioned_rhs(tmp, k2, d, t + 0.5 * dt, gamma_total);
  for (std::size_t i = 0; i < n; ++i) tmp.amps[i] = y.amps[i] + 0.5 * dt * k2.amps[i];
  conditioned_rhs(tmp, k3, d, t + 0.5 * dt, gamma_total);
  for (std::size_t i = 0; i < n; ++i) tmp.amps[i] = y.amps[i] + dt * k3.amps[i];
  conditioned_rhs(tmp, k4, d, t + dt, gamma_total);
  for (std::size_t i = 0; i < n; ++i) {
    y.amps[i] += dt / 6.0 *
                 (k1.amps[i] + 2.0 * k2.amps[i] + 2.0 * k3.amps[i] + k4.amps[i]);
  }
}

double resolve_dt(const NaturalDrive& d, double dt) {
  if (dt <= 0.0) return 2.0 * M_PI / (200.0 * d.nu);
  if (dt * d.nu > 2.0 * M_PI / 50.0) {
    throw ConfigError("dt too coarse to resolve the trap phase: dt * nu = " +
                      std::to_string(dt * d.nu));
  }
  return dt;
}

void check_truncation(const IonState& st) {
  const double top = st.top_two_population();
  if (top > kTruncationLimit) {
    throw TruncationError("top-two Fock population " + std::to_string(top) +
                          " exceeds 1e-6; raise n_max");
  }
}

} // namespace detail

IonState apply_sideband_hamiltonian(const IonState& state, double t_natural,
                                    const IonParams& params) {
  const auto d = detail::NaturalDrive::from(params);
  IonState out(state.n_max());
  out.time = state.time;
  detail::apply_single_sideband(state, out, d, t_natural, d.single_delta);
  return out;
}

IonState apply_bichromatic_drive(const IonState& state, double t_natural,
                                 const IonParams& params) {
  const auto d = detail::NaturalDrive::from(params);
  IonState out(state.n_max());
  out.time = state.time;
  detail::apply_drive(state, out, d, t_natural);
  return out;
}

ConditionedResult evolve_conditioned(const IonState& initial, const IonParams& params,
                                     double t_final, double dt,
                                     std::size_t sample_stride) {
  const auto d = detail::NaturalDrive::from(params);
  const double h = detail::resolve_dt(d, dt);
  const std::size_t n_steps = static_cast<std::size_t>(std::llround(t_final / h));

  ConditionedResult res{initial, 1.0, {}, params.lamb_dicke_warning()};
  IonState k1(initial.n_max()), k2(initial.n_max()), k3(initial.n_max()),
      k4(initial.n_max()), tmp(initial.n_max());

  auto sample = [&](std::size_t i) {
    res.state.time = static_cast<double>(i) * h;
    detail::check_truncation(res.state);
    res.series.samples.push_back(res.state.observables());
  };

  sample(0);
  for (std::size_t i = 1; i <= n_steps; ++i) {
    detail::rk4_step(res.state, static_cast<double>(i - 1) * h, h, d, d.gamma,
                     k1, k2, k3, k4, tmp);
    if (i % sample_stride == 0 || i == n_steps) sample(i);
  }
  res.success_probability = res.state.norm_sq();
  return res;
}

} // namespace tachsim::ion
