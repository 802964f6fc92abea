#ifndef TACHSIM_ION_DETAIL_HPP
#define TACHSIM_ION_DETAIL_HPP

#include "tachsim/ion.hpp"

namespace tachsim::ion::detail {

// Drive quantities in natural units (all rates scaled by Delta/c).
struct NaturalDrive {
  double omt = 0.0; // carrier strength, = 1/(2 eta)
  double nu = 0.0;  // trap frequency
  double eta = 0.0;
  double sin_phi = 0.0;
  double cos_phi = 1.0;
  double delta_red = 0.0;  // -nu - 2 delta'
  double delta_blue = 0.0; // +nu - 2 delta'
  double gamma = 0.0;      // decay rate
  double gamma_d = 0.0;    // pumping-error rate
  double single_delta = 0.0; // literal H_o detuning (params.delta, natural)

  static NaturalDrive from(const IonParams& p);
};

void add_spin_flip_terms(const IonState& in, IonState& out, const NaturalDrive& d,
                         double t, Complex coef_minus, Complex coef_plus);
void apply_single_sideband(const IonState& in, IonState& out, const NaturalDrive& d,
                           double t, double delta);
void apply_drive(const IonState& in, IonState& out, const NaturalDrive& d, double t);
void conditioned_rhs(const IonState& in, IonState& out, const NaturalDrive& d,
                     double t, double gamma_total);
void rk4_step(IonState& y, double t, double dt, const NaturalDrive& d,
              double gamma_total, IonState& k1, IonState& k2, IonState& k3,
              IonState& k4, IonState& tmp);
double resolve_dt(const NaturalDrive& d, double dt);
void check_truncation(const IonState& st);

} // namespace tachsim::ion::detail

#endif
