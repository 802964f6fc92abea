#ifndef TACHSIM_DIRAC_HPP
#define TACHSIM_DIRAC_HPP

#include <array>
#include <complex>

namespace tachsim {

using Complex = std::complex<double>;
using Spinor = std::array<Complex, 2>;

enum class MassType { normal, tachyon };

/// Parameters of the 1+1D Dirac Hamiltonian in natural units (c = 1).
/// normal  : H = p sigma_x + m sigma_z
/// tachyon : H = p sigma_x - i m sigma_z
/// potential_slope g adds a linear electric potential g*x.
struct DiracParams {
  double mass = 0.0;
  MassType mass_type = MassType::normal;
  double potential_slope = 0.0;
};

inline Complex mass_term(const DiracParams& p) {
  return p.mass_type == MassType::normal ? Complex(p.mass, 0.0)
                                         : Complex(0.0, -p.mass);
}

inline double spinor_norm_sq(const Spinor& s) {
  return std::norm(s[0]) + std::norm(s[1]);
}

} // namespace tachsim

#endif
