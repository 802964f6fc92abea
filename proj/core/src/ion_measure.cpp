#include <cmath>

#include "tachsim/errors.hpp"
#include "tachsim/ion.hpp"

namespace tachsim::ion {

namespace {

// exp(-i k x) on one phonon vector via a Taylor series in the tridiagonal
// x = a + a^dag; converges fast because |k| sqrt(n_max) stays small in the
// protocol regime.
void apply_displacement_phase(std::vector<Complex>& v, double k) {
  const std::size_t nl = v.size();
  std::vector<Complex> term = v, next(nl);
  const Complex mik(0.0, -k);
  for (int order = 1; order <= 64; ++order) {
    double mag = 0.0;
    for (std::size_t n = 0; n < nl; ++n) {
      Complex xv = 0.0;
      if (n + 1 < nl) xv += std::sqrt(static_cast<double>(n + 1)) * term[n + 1];
      if (n > 0) xv += std::sqrt(static_cast<double>(n)) * term[n - 1];
      next[n] = mik * xv / static_cast<double>(order);
      mag += std::norm(next[n]);
    }
    term.swap(next);
    for (std::size_t n = 0; n < nl; ++n) v[n] += term[n];
    if (mag < 1e-32) return;
  }
}

double sigma_z_of(const IonState& st) {
  double up = 0.0, down = 0.0;
  for (std::size_t n = 0; n < st.n_levels; ++n) {
    up += std::norm(st.amp(0, n));
    down += std::norm(st.amp(1, n));
  }
  return (up - down) / (up + down);
}

} // namespace

CorrelationEstimate measure_correlation_protocol(const IonState& state,
                                                 const IonParams& params,
                                                 const std::vector<double>& k_values) {
  (void)params;
  if (k_values.size() < 2) {
    throw ConfigError("protocol needs at least two displacement strengths");
  }

  const ObservableRecord direct = state.observables();
  const double x_scale = std::abs(direct.mean_x) + 3.0;
  double k_max = 0.0;
  for (double k : k_values) k_max = std::max(k_max, std::abs(k));
  if (k_max * x_scale > 0.5) {
    throw ProtocolRegimeError("k values violate the linearization regime k<x> << 1");
  }

  // Spinor rotation V = e^{i pi sigma_x / 4} maps sigma_y readout to sigma_z:
  // <x sigma_y>_{V psi} = <x sigma_z>_psi.
  IonState rotated = state;
  const Complex c(std::cos(M_PI / 4.0), 0.0);
  const Complex is(0.0, std::sin(M_PI / 4.0));
  for (std::size_t n = 0; n < state.n_levels; ++n) {
    const Complex u = state.amp(0, n), d = state.amp(1, n);
    rotated.amp(0, n) = c * u + is * d;
    rotated.amp(1, n) = is * u + c * d;
  }

  // U = e^{-i k x sigma_x}: displace the sigma_x eigencomponents oppositely.
  std::vector<double> readings(k_values.size());
  const std::size_t nl = state.n_levels;
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    std::vector<Complex> plus(nl), minus(nl);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t n = 0; n < nl; ++n) {
      plus[n] = (rotated.amp(0, n) + rotated.amp(1, n)) * inv_sqrt2;
      minus[n] = (rotated.amp(0, n) - rotated.amp(1, n)) * inv_sqrt2;
    }
    apply_displacement_phase(plus, k_values[i]);
    apply_displacement_phase(minus, -k_values[i]);
    IonState displaced(state.n_max());
    for (std::size_t n = 0; n < nl; ++n) {
      displaced.amp(0, n) = (plus[n] + minus[n]) * inv_sqrt2;
      displaced.amp(1, n) = (plus[n] - minus[n]) * inv_sqrt2;
    }
    readings[i] = sigma_z_of(displaced);
  }

  // Least-squares slope of <O>(k) at k = 0.
  double sk = 0.0, skk = 0.0, sy = 0.0, sky = 0.0;
  const double m = static_cast<double>(k_values.size());
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    sk += k_values[i];
    skk += k_values[i] * k_values[i];
    sy += readings[i];
    sky += k_values[i] * readings[i];
  }
  const double denom = m * skk - sk * sk;
  if (std::abs(denom) < 1e-30) {
    throw ConfigError("degenerate k values; cannot fit a slope");
  }
  const double slope = (m * sky - sk * sy) / denom;

  CorrelationEstimate est;
  est.moment_xz = slope;
  est.mean_x = direct.mean_x;
  est.mean_sigma_z = direct.mean_sigma_z;
  est.connected = slope - direct.mean_x * direct.mean_sigma_z;
  return est;
}

} // namespace tachsim::ion
