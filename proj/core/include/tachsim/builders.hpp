#ifndef TACHSIM_BUILDERS_HPP
#define TACHSIM_BUILDERS_HPP

#include "tachsim/dirac.hpp"
#include "tachsim/grid.hpp"
#include "tachsim/spinor_field.hpp"

namespace tachsim {

/// Separable packet N e^{i p_o x} e^{-x^2/(4 width^2)} (s0, s1), normalized.
/// Throws DomainTooSmallError when the envelope at the boundary exceeds 1e-12.
SpinorField gaussian_packet(const SpatialGrid& grid, double p_o, double width,
                            const Spinor& spinor, double center = 0.0);

/// Positive-energy packet: Riemann sum over the momentum grid of
/// e^{-width^2 (p-p_o)^2} e^{i p x} u_+(p), normalized. For a tachyon the
/// complex-eigenvalue band |p| <= m is excluded; if the Gaussian weight on
/// the excluded band exceeds 1e-8 an IllConditionedPacketError is thrown.
SpinorField positive_energy_packet(const SpatialGrid& grid, double p_o,
                                   double width, const DiracParams& params,
                                   double center = 0.0);

} // namespace tachsim

#endif
