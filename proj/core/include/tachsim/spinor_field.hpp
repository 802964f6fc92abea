#ifndef TACHSIM_SPINOR_FIELD_HPP
#define TACHSIM_SPINOR_FIELD_HPP

#include <complex>
#include <vector>

#include "tachsim/dirac.hpp"
#include "tachsim/grid.hpp"

namespace tachsim {

/// Two-component wavefunction psi(x) on a SpatialGrid. Component 0 is
/// spin-up (sigma_z = +1), component 1 spin-down. Stored amplitudes are
/// never mutated by observation; observables renormalize internally.
struct SpinorField {
  SpatialGrid grid;
  std::vector<Complex> up;
  std::vector<Complex> down;

  explicit SpinorField(const SpatialGrid& g)
      : grid(g), up(g.n_points()), down(g.n_points()) {}

  /// Raw squared norm, sum_x (|up|^2 + |down|^2) dx.
  double norm_sq() const;

  /// Divides by the current norm so norm_sq() == 1.
  void normalize();

  SpinorField scaled(Complex factor) const;
};

} // namespace tachsim

#endif
