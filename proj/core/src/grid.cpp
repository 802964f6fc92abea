#include "tachsim/grid.hpp"

#include <cmath>
#include <string>

#include "tachsim/errors.hpp"

namespace tachsim {

namespace {
bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
}

SpatialGrid::SpatialGrid(std::size_t n_points, double extent)
    : n_(n_points), extent_(extent) {
  if (!is_power_of_two(n_points) || n_points < 16) {
    throw ConfigError("grid n_points must be a power of two >= 16, got " +
                      std::to_string(n_points));
  }
  if (!(extent > 0.0)) {
    throw ConfigError("grid extent must be positive");
  }
}

double SpatialGrid::momentum_spacing() const { return 2.0 * M_PI / extent_; }

double SpatialGrid::max_momentum() const { return M_PI / dx(); }

double SpatialGrid::x(std::size_t j) const {
  return (static_cast<double>(j) - static_cast<double>(n_ / 2)) * dx();
}

double SpatialGrid::momentum(std::size_t k) const {
  const double kk = (k < n_ / 2) ? static_cast<double>(k)
                                 : static_cast<double>(k) - static_cast<double>(n_);
  return kk * momentum_spacing();
}

SpatialGrid make_grid(std::size_t n_points, double extent) {
  return SpatialGrid(n_points, extent);
}

} // namespace tachsim
