#include "tachsim/spinor_field.hpp"

#include <cmath>

#include "tachsim/errors.hpp"

namespace tachsim {

double SpinorField::norm_sq() const {
  double s = 0.0;
  for (std::size_t j = 0; j < up.size(); ++j) {
    s += std::norm(up[j]) + std::norm(down[j]);
  }
  return s * grid.dx();
}

void SpinorField::normalize() {
  const double n2 = norm_sq();
  if (!(n2 > 0.0)) throw DegenerateStateError("cannot normalize a zero-norm field");
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& z : up) z *= inv;
  for (auto& z : down) z *= inv;
}

SpinorField SpinorField::scaled(Complex factor) const {
  SpinorField out(grid);
  for (std::size_t j = 0; j < up.size(); ++j) {
    out.up[j] = factor * up[j];
    out.down[j] = factor * down[j];
  }
  return out;
}

} // namespace tachsim
