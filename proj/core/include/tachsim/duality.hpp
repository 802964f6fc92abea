#ifndef TACHSIM_DUALITY_HPP
#define TACHSIM_DUALITY_HPP

#include <vector>

#include "tachsim/dirac.hpp"
#include "tachsim/evolution.hpp"
#include "tachsim/grid.hpp"

namespace tachsim::duality {

enum class Axis { space, time };

/// A two-spinor sampled on a rectangular (x, t) lattice, together with the
/// minimal-coupling potentials of the equation it is supposed to solve:
///   i dt psi = [ (p - A) sigma_x + M sigma_z + phi ] psi,
/// M = m (normal) or -i m (tachyon). The potentials depend on x for a
/// normal input and on t after the duality swap (potential_axis).
/// spectral_axis marks the periodic direction: derivatives along it are
/// spectral, derivatives along the other use 4th-order finite differences.
/// For solutions recorded from evolution that is the space axis; the dual
/// transform transposes the lattice, so the tag follows the data.
struct SpacetimeSolution {
  std::vector<double> xs; // uniform
  std::vector<double> ts; // uniform
  // Row-major [t index][x index].
  std::vector<Complex> up;
  std::vector<Complex> down;
  DiracParams params;
  std::vector<double> phi;  // sampled on potential_axis
  std::vector<double> avec; // vector potential on the same axis
  Axis potential_axis = Axis::space;
  Axis spectral_axis = Axis::space;

  std::size_t n_x() const { return xs.size(); }
  std::size_t n_t() const { return ts.size(); }
  double dx() const { return xs[1] - xs[0]; }
  double dt() const { return ts[1] - ts[0]; }
  const Complex& at_up(std::size_t k, std::size_t j) const { return up[k * n_x() + j]; }
  const Complex& at_down(std::size_t k, std::size_t j) const { return down[k * n_x() + j]; }
};

/// psi'(x', t') = U^{-1} psi(x = t', t = x') with U = (I + i sigma_x)/sqrt(2),
/// phi'(t') = -A(t'), A'(t') = -phi(t'), tagged tachyon with the same mass.
/// Requires a square lattice whose x and t coordinates coincide, and a
/// normal-mass input.
SpacetimeSolution dual_transform(const SpacetimeSolution& solution);

/// Max over evaluated lattice points of |i dt psi - H psi| with the
/// derivative rules described on SpacetimeSolution. Finite-difference
/// directions skip two points at each border.
double equation_residual(const SpacetimeSolution& solution);

/// Exact plane wave e^{i(p x - E t)} u_+(p) on a square lattice with
/// ts = xs; p should be a momentum-grid frequency of the window.
SpacetimeSolution plane_wave_solution(std::size_t n, double extent, double p,
                                      const DiracParams& params);

/// Runs the split-step solver and records the complex field every
/// `record_stride` steps into a lattice with n_rows rows (t spacing =
/// record_stride * config.dt). If relabel_time is true the time axis is
/// relabeled to the spatial coordinates, which is valid for the
/// time-independent potentials used here and makes the lattice square.
SpacetimeSolution record_lattice(const SpinorField& initial,
                                 const EvolutionConfig& config,
                                 std::size_t n_rows, std::size_t record_stride,
                                 bool relabel_time);

} // namespace tachsim::duality

#endif
