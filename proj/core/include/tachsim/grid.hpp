#ifndef TACHSIM_GRID_HPP
#define TACHSIM_GRID_HPP

#include <cstddef>

namespace tachsim {

/// Periodic spatial grid centered at x = 0 with its exact Fourier-dual
/// momentum grid. Momenta are stored in FFT order: k = 0..n/2-1 positive,
/// k = n/2..n-1 negative, spacing 2*pi/extent.
class SpatialGrid {
public:
  SpatialGrid(std::size_t n_points, double extent);

  std::size_t n_points() const { return n_; }
  double extent() const { return extent_; }
  double dx() const { return extent_ / static_cast<double>(n_); }
  double momentum_spacing() const;
  double max_momentum() const; // pi / dx

  /// Site position, x_j = (j - n/2) * dx; spans [-L/2, L/2).
  double x(std::size_t j) const;
  /// Momentum of FFT bin k.
  double momentum(std::size_t k) const;

private:
  std::size_t n_;
  double extent_;
};

SpatialGrid make_grid(std::size_t n_points, double extent);

} // namespace tachsim

#endif
