#ifndef TACHSIM_ANALYTIC_HPP
#define TACHSIM_ANALYTIC_HPP

#include <complex>

#include "tachsim/dirac.hpp"

namespace tachsim::analytic {

enum class Branch { plus, minus };

/// Branch energies of the 2x2 Hamiltonian at momentum p.
/// normal : E = +-sqrt(p^2 + m^2), always real.
/// tachyon: E = +-sqrt(p^2 - m^2), a complex conjugate pair for |p| < m.
/// plus == -minus always; complex values are returned explicitly.
struct BranchEnergy {
  Complex plus;
  Complex minus;
  bool is_real = true;
};

BranchEnergy dispersion(double p, const DiracParams& params);

/// Normalized right eigenvector of H(p) on the requested branch.
/// Phase convention: first component real and nonnegative (second component
/// real and nonnegative when the first vanishes).
/// Throws ExceptionalPointError for a tachyon with |p| == m, where the
/// matrix is defective.
Spinor eigenspinor(double p, const DiracParams& params, Branch branch);

/// dE/dp on the plus branch; requires a real-spectrum momentum
/// (tachyon needs |p| > m, else ComplexBandError).
double group_velocity(double p, const DiracParams& params);

/// Klein tunneling probability through a linear potential of slope g.
/// normal : exp(-pi m^2 / g)
/// tachyon: e^{pi m^2/g} / (2 e^{pi m^2/g} - 1), evaluated overflow-free.
double tunneling_probability(const DiracParams& params, double g);

struct DecayStats {
  double mu = 0.0;        // mean number of decay events
  double p_success = 1.0; // probability of zero decay events, e^{-mu}
};

/// mu = 2 m' t' N in the <sigma_z> = 0 approximation.
DecayStats decay_statistics(double m_prime, double t_prime, int n_ions);

/// Large-p_o spinor-motion correlation of the positive-energy packet:
/// -m/(2 p_o^2) for a tachyon, exactly 0 for a normal particle.
double correlation_asymptote(double p_o, const DiracParams& params);

} // namespace tachsim::analytic

#endif
