#include "tachsim/analytic.hpp"

#include <cmath>
#include <string>

#include "tachsim/errors.hpp"

namespace tachsim::analytic {

namespace {

constexpr double kExceptionalTol = 1e-12;

// Diagonal entry of H = [[a, p], [p, -a]]: a = m (normal), -i m (tachyon).
Complex diag_term(const DiracParams& params) { return mass_term(params); }

} // namespace

BranchEnergy dispersion(double p, const DiracParams& params) {
  BranchEnergy out;
  if (params.mass_type == MassType::normal) {
    const double e = std::hypot(p, params.mass);
    out.plus = e;
    out.minus = -e;
    out.is_real = true;
    return out;
  }
  const double d = p * p - params.mass * params.mass;
  if (d >= 0.0) {
    const double e = std::sqrt(d);
    out.plus = e;
    out.minus = -e;
    out.is_real = true;
  } else {
    const double e = std::sqrt(-d);
    out.plus = Complex(0.0, e);
    out.minus = Complex(0.0, -e);
    out.is_real = false;
  }
  return out;
}

Spinor eigenspinor(double p, const DiracParams& params, Branch branch) {
  const double m = params.mass;
  if (params.mass_type == MassType::tachyon &&
      std::abs(p * p - m * m) < kExceptionalTol) {
    throw ExceptionalPointError(
        "tachyon Hamiltonian is defective at |p| = m (p = " + std::to_string(p) + ")");
  }

  const Complex a = diag_term(params);
  const BranchEnergy be = dispersion(p, params);
  const Complex e = (branch == Branch::plus) ? be.plus : be.minus;

  // Two algebraically equivalent eigenvector forms; pick the better-conditioned.
  const Spinor v1{e + a, Complex(p, 0.0)};
  const Spinor v2{Complex(p, 0.0), e - a};
  Spinor v = (spinor_norm_sq(v1) >= spinor_norm_sq(v2)) ? v1 : v2;

  const double nrm = std::sqrt(spinor_norm_sq(v));
  v[0] /= nrm;
  v[1] /= nrm;

  // Phase convention: leading component real and nonnegative.
  const Complex lead = (std::abs(v[0]) > 1e-12) ? v[0] : v[1];
  const Complex phase = std::conj(lead) / std::abs(lead);
  v[0] *= phase;
  v[1] *= phase;
  return v;
}

double group_velocity(double p, const DiracParams& params) {
  if (params.mass_type == MassType::tachyon) {
    if (std::abs(p) <= params.mass) {
      throw ComplexBandError("group velocity undefined for tachyon with |p| <= m");
    }
    return p / std::sqrt(p * p - params.mass * params.mass);
  }
  return p / std::hypot(p, params.mass);
}

double tunneling_probability(const DiracParams& params, double g) {
  if (!(g > 0.0)) throw ConfigError("tunneling probability requires g > 0");
  const double expo = M_PI * params.mass * params.mass / g;
  if (params.mass_type == MassType::normal) {
    return std::exp(-expo);
  }
  // e^{expo} / (2 e^{expo} - 1) rewritten to avoid overflow at small g.
  return 1.0 / (2.0 - std::exp(-expo));
}

DecayStats decay_statistics(double m_prime, double t_prime, int n_ions) {
  if (m_prime < 0.0 || t_prime < 0.0 || n_ions < 1) {
    throw ConfigError("decay_statistics requires m' >= 0, t' >= 0, N >= 1");
  }
  DecayStats out;
  out.mu = 2.0 * m_prime * t_prime * static_cast<double>(n_ions);
  out.p_success = std::exp(-out.mu);
  return out;
}

double correlation_asymptote(double p_o, const DiracParams& params) {
  if (params.mass_type == MassType::normal) return 0.0;
  if (p_o == 0.0) throw ConfigError("correlation asymptote requires p_o != 0");
  return -params.mass / (2.0 * p_o * p_o);
}

} // namespace tachsim::analytic
