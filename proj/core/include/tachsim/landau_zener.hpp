#ifndef TACHSIM_LANDAU_ZENER_HPP
#define TACHSIM_LANDAU_ZENER_HPP

#include "tachsim/analytic.hpp"
#include "tachsim/dirac.hpp"

namespace tachsim::lz {

/// Momentum-space two-level reduction of linear-potential scattering:
/// i d/dt xi = [ (p_start - g t) sigma_x + M sigma_z ] xi with M = m or -i m.
/// The ramp ends when the instantaneous momentum reaches p_end.
struct LZConfig {
  double p_start = 8.0;  // > m
  double p_end = -8.0;   // < -m
  double g = 2.0;        // ramp rate
  DiracParams params;
  double dt = 0.0;       // 0 selects the tolerance-based step
};

struct TwoLevelState {
  Spinor amplitudes{Complex(1.0, 0.0), Complex(0.0, 0.0)};
  double time = 0.0;
  double instantaneous_p = 0.0;

  double norm_sq() const { return spinor_norm_sq(amplitudes); }
};

struct BranchPopulations {
  double plus = 0.0;
  double minus = 0.0;
};

/// Fixed-step 4th-order integration through the ramp, starting from the
/// requested eigenspinor of H(p_start).
TwoLevelState lz_evolve(const LZConfig& config, analytic::Branch initial_branch);

/// Biorthogonal branch decomposition at the state's instantaneous momentum;
/// populations are |c_i|^2 ||R_i||^2 normalized to sum to one. Both 2x2
/// Hamiltonians here are complex symmetric, so the left eigenvectors are
/// the transposes of the right ones, and the Hermitian case reduces to
/// orthogonal projection exactly.
BranchPopulations branch_populations(const TwoLevelState& state,
                                     const DiracParams& params);

/// Minus-branch population after a plus-branch start: the transmitted
/// (right-moving) fraction.
double lz_tunnel_probability(const LZConfig& config);

} // namespace tachsim::lz

#endif
