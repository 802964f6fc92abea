#include <cmath>

#include "tachsim/errors.hpp"
#include "tachsim/ion.hpp"

namespace tachsim::ion {

IonState IonState::coherent(Complex alpha, const Spinor& spinor, std::size_t n_max) {
  IonState st(n_max);
  const double sn = std::sqrt(spinor_norm_sq(spinor));
  // c_{n+1} = c_n * alpha / sqrt(n+1), c_0 = e^{-|alpha|^2/2}
  Complex c = std::exp(-0.5 * std::norm(alpha));
  for (std::size_t n = 0; n <= n_max; ++n) {
    st.amp(0, n) = c * spinor[0] / sn;
    st.amp(1, n) = c * spinor[1] / sn;
    c *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  return st;
}

double IonState::norm_sq() const {
  double s = 0.0;
  for (const auto& z : amps) s += std::norm(z);
  return s;
}

double IonState::top_two_population() const {
  const std::size_t nm = n_max();
  const double top = std::norm(amp(0, nm)) + std::norm(amp(1, nm)) +
                     std::norm(amp(0, nm - 1)) + std::norm(amp(1, nm - 1));
  return top / norm_sq();
}

ObservableRecord IonState::observables() const {
  const std::size_t nl = n_levels;
  double nsq = 0.0, sz = 0.0;
  Complex a_mean = 0.0, a_up = 0.0, a_down = 0.0, cross = 0.0;
  double n_up = 0.0, n_down = 0.0;
  for (std::size_t n = 0; n < nl; ++n) {
    const Complex u = amp(0, n), d = amp(1, n);
    n_up += std::norm(u);
    n_down += std::norm(d);
    cross += std::conj(u) * d;
    if (n + 1 < nl) {
      const double r = std::sqrt(static_cast<double>(n + 1));
      a_up += std::conj(u) * (r * amp(0, n + 1));
      a_down += std::conj(d) * (r * amp(1, n + 1));
    }
  }
  nsq = n_up + n_down;
  if (!(nsq > 0.0)) throw DegenerateStateError("observables on a zero-norm ion state");
  a_mean = a_up + a_down;
  sz = n_up - n_down;

  ObservableRecord rec;
  rec.time = time;
  rec.norm_sq = nsq;
  rec.mean_x = 2.0 * a_mean.real() / nsq;        // x = a + a^dag (Delta = 1)
  rec.mean_p = a_mean.imag() / nsq;              // p = i(a^dag - a)/2
  rec.mean_sigma_x = 2.0 * cross.real() / nsq;
  rec.mean_sigma_y = 2.0 * cross.imag() / nsq;
  rec.mean_sigma_z = sz / nsq;
  // <x sigma_z> from the spin-resolved ladder means
  const double x_up = 2.0 * a_up.real();
  const double x_down = 2.0 * a_down.real();
  rec.correlation_xz = (x_up - x_down) / nsq - rec.mean_x * rec.mean_sigma_z;
  return rec;
}

IonState project_to_fock(const SpinorField& field, std::size_t n_max) {
  const auto& g = field.grid;
  const std::size_t npts = g.n_points();
  IonState st(n_max);

  // Normalized oscillator eigenfunctions with unit ground-state width:
  // phi_n(x) = 2^{-1/4} h_n(x / sqrt(2)) with h_n the standard Hermite
  // functions; h_{n+1} = y sqrt(2/(n+1)) h_n - sqrt(n/(n+1)) h_{n-1}.
  std::vector<double> h_prev(npts), h_cur(npts);
  const double norm0 = std::pow(M_PI, -0.25) * std::pow(2.0, -0.25);
  for (std::size_t j = 0; j < npts; ++j) {
    const double y = g.x(j) / std::sqrt(2.0);
    h_cur[j] = norm0 * std::exp(-0.5 * y * y);
  }
  const double dx = g.dx();
  for (std::size_t n = 0; n <= n_max; ++n) {
    Complex cu = 0.0, cd = 0.0;
    for (std::size_t j = 0; j < npts; ++j) {
      cu += h_cur[j] * field.up[j];
      cd += h_cur[j] * field.down[j];
    }
    st.amp(0, n) = cu * dx;
    st.amp(1, n) = cd * dx;
    if (n < n_max) {
      const double c1 = std::sqrt(2.0 / static_cast<double>(n + 1));
      const double c2 = (n == 0) ? 0.0
                                 : std::sqrt(static_cast<double>(n) /
                                             static_cast<double>(n + 1));
      for (std::size_t j = 0; j < npts; ++j) {
        const double y = g.x(j) / std::sqrt(2.0);
        const double next = y * c1 * h_cur[j] - c2 * h_prev[j];
        h_prev[j] = h_cur[j];
        h_cur[j] = next;
      }
    }
  }
  return st;
}

} // namespace tachsim::ion
