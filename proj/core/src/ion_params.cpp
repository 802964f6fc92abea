#include <cmath>

#include "tachsim/errors.hpp"
#include "tachsim/ion.hpp"

namespace tachsim::ion {

IonMapping ideal_mapping(const IonParams& params, MassSource source) {
  if (!(params.eta > 0.0) || !(params.omega_tilde > 0.0) || !(params.delta_x > 0.0)) {
    throw ConfigError("ideal_mapping requires eta, omega_tilde, delta_x > 0");
  }
  IonMapping map;
  map.c_si = 2.0 * params.eta * params.delta_x * params.omega_tilde;
  map.units.length_unit_m = params.delta_x;
  map.units.time_unit_s = params.delta_x / map.c_si; // = 1 / (2 eta omega_tilde)

  if (source == MassSource::decay) {
    map.m_prime = (params.gamma / 4.0) * map.units.time_unit_s;
    map.dirac = DiracParams{map.m_prime, MassType::tachyon, 0.0};
  } else {
    map.m_prime = params.delta * map.units.time_unit_s;
    map.dirac = DiracParams{map.m_prime, MassType::normal, 0.0};
  }
  return map;
}

double eq3_norm_sq(double norm_sq, double gamma_natural, double t_natural) {
  return norm_sq * std::exp(gamma_natural * t_natural / 2.0);
}

} // namespace tachsim::ion
