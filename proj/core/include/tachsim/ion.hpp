#ifndef TACHSIM_ION_HPP
#define TACHSIM_ION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tachsim/dirac.hpp"
#include "tachsim/observables.hpp"
#include "tachsim/spinor_field.hpp"
#include "tachsim/units.hpp"

namespace tachsim::ion {

/// Trapped-ion drive and noise parameters. Frequencies and rates are
/// angular (rad/s); delta_x is the ground-state size in meters.
struct IonParams {
  double eta = 0.05;                   // Lamb-Dicke parameter
  double omega_tilde = 2.0 * 3.14159265358979323846 * 1e5; // carrier strength
  double nu = 2.0 * 3.14159265358979323846 * 1e6;          // trap frequency
  double delta = 0.0;                  // detuning realizing a normal mass m c^2
  double phi = 0.0;                    // standing-wave phase; sin(phi)=0 kills the carrier
  double gamma = 0.0;                  // decay rate of |up>, m c^2 = gamma/4
  std::optional<double> gamma_d;       // pumping-error rate; defaults to 0.002*gamma
  double delta_x = 3.4e-9;             // Delta in meters
  std::size_t n_max = 128;             // Fock cutoff
  double readout_fidelity = 1.0;       // P(decayed run classified as decayed)

  double gamma_d_value() const { return gamma_d ? *gamma_d : 0.002 * gamma; }
  bool lamb_dicke_warning() const { return eta > 0.2; }
};

enum class MassSource { detuning, decay };

/// Effective Dirac parameters realized by the drive: c = 2 eta Delta
/// Omega-tilde, m c^2 = delta (detuning source, normal) or gamma/4
/// (decay source, tachyon).
struct IonMapping {
  double c_si = 0.0;        // effective speed of light, m/s
  NaturalUnits units;       // Delta and Delta/c
  double m_prime = 0.0;     // dimensionless mass m c Delta
  DiracParams dirac;        // natural-unit parameters for the ideal solvers
};

IonMapping ideal_mapping(const IonParams& params, MassSource source);

/// Spinor (x) truncated Fock space state; amps[s * (n_max+1) + n].
/// Spin index 0 is |up> (sigma_z = +1).
struct IonState {
  std::size_t n_levels = 0; // n_max + 1
  std::vector<Complex> amps;
  double time = 0.0; // natural units

  explicit IonState(std::size_t n_max)
      : n_levels(n_max + 1), amps(2 * (n_max + 1)) {}

  static IonState coherent(Complex alpha, const Spinor& spinor, std::size_t n_max);

  std::size_t n_max() const { return n_levels - 1; }
  Complex& amp(int s, std::size_t n) { return amps[s * n_levels + n]; }
  const Complex& amp(int s, std::size_t n) const { return amps[s * n_levels + n]; }

  double norm_sq() const;
  /// Renormalized population of the top two Fock levels (truncation monitor).
  double top_two_population() const;
  /// x = Delta(a + a^dag), p = i(a^dag - a)/(2 Delta) in natural units Delta = 1.
  ObservableRecord observables() const;
};

/// Quadrature projection of a spatial spinor field onto the oscillator
/// basis with unit ground-state width (the Fock-space image of the field).
IonState project_to_fock(const SpinorField& field, std::size_t n_max);

/// Literal single-detuning sideband term
///   H_o = i W (s- e^{i d t} - s+ e^{-i d t}) [sin(phi) + eta cos(phi)
///         (a e^{-i nu t} + a^dag e^{i nu t})]
/// applied to a state, in natural units (frequencies scaled by Delta/c).
IonState apply_sideband_hamiltonian(const IonState& state, double t_natural,
                                    const IonParams& params);

/// Red + blue sideband pair realizing c p sigma_x in the rotating-wave
/// limit (with a common shift of -2 delta implementing the mass detuning);
/// equals apply_sideband_hamiltonian at delta -> -nu - 2 delta minus the
/// same at delta -> +nu - 2 delta.
IonState apply_bichromatic_drive(const IonState& state, double t_natural,
                                 const IonParams& params);

struct ConditionedResult {
  IonState state;
  double success_probability = 1.0; // final raw squared norm
  ObservableSeries series;
  bool lamb_dicke_warning = false;
};

/// No-jump evolution under i d/dt psi = [H_drive(t) - i(gamma/2) s+ s-] psi
/// (full projector form; the sigma_z-only convention is recovered by
/// eq3_norm_sq). Times are natural units; dt = 0 selects 2*pi/(200 nu).
ConditionedResult evolve_conditioned(const IonState& initial, const IonParams& params,
                                     double t_final, double dt = 0.0,
                                     std::size_t sample_stride = 32);

/// Converts a projector-form squared norm to the sigma_z-only convention.
double eq3_norm_sq(double norm_sq, double gamma_natural, double t_natural);

enum class JumpChannel { decay, pumping };

struct JumpRecord {
  double time = 0.0;
  JumpChannel channel = JumpChannel::decay;
};

struct TrajectoryRecord {
  std::uint64_t seed = 0;
  std::vector<JumpRecord> jumps;
  bool decayed = false;
  double decay_time = -1.0;
  bool misclassified = false; // decayed but read out as no-jump
};

struct TrajectoryEnsemble {
  std::size_t n_total = 0;
  std::size_t n_no_jump = 0; // no decay event over the full run
  std::uint64_t master_seed = 0;
  std::vector<TrajectoryRecord> trajectories;
  /// Conditioned averages over trajectories with no decay up to each sample
  /// time (misclassified trajectories contaminate them when
  /// readout_fidelity < 1). norm_sq carries the surviving fraction.
  ObservableSeries conditioned;
};

/// Quantum-jump unraveling with a terminal decay channel |up> -> |a> at
/// rate gamma and a pumping-error channel at rate gamma_d that re-projects
/// onto |up> and stays in the conditioned set. Deterministic for a fixed
/// master seed, independent of thread count.
TrajectoryEnsemble run_trajectories(const IonParams& params, const IonState& initial,
                                    double t_final, std::size_t n_traj,
                                    std::uint64_t master_seed, double dt = 0.0,
                                    std::size_t sample_stride = 32);

struct CorrelationEstimate {
  double moment_xz = 0.0;  // protocol estimate of <x sigma_z>
  double connected = 0.0;  // moment_xz - <x><sigma_z>
  double mean_x = 0.0;
  double mean_sigma_z = 0.0;
};

/// State-dependent-displacement protocol: rotate the spinor so sigma_y maps
/// to sigma_z, apply U = e^{-i k x sigma_x} for each k, read <sigma_z> of
/// the transformed state and take the least-squares slope at k = 0.
CorrelationEstimate measure_correlation_protocol(const IonState& state,
                                                 const IonParams& params,
                                                 const std::vector<double>& k_values);

} // namespace tachsim::ion

#endif
