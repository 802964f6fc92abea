#ifndef TACHSIM_UNITS_HPP
#define TACHSIM_UNITS_HPP

namespace tachsim {

/// Natural-unit system used by every solver: hbar = c = Delta = 1, with
/// masses quoted as m' = m c Delta and times as t' = t c / Delta.
/// The SI scales below are display-only metadata; conversion round-trips
/// exactly because it is a single multiplication.
struct NaturalUnits {
  double length_unit_m = 1.0; // ground-state size Delta in meters
  double time_unit_s = 1.0;   // Delta / c in seconds

  double to_si_length(double x_natural) const { return x_natural * length_unit_m; }
  double from_si_length(double x_si) const { return x_si / length_unit_m; }
  double to_si_time(double t_natural) const { return t_natural * time_unit_s; }
  double from_si_time(double t_si) const { return t_si / time_unit_s; }
};

} // namespace tachsim

#endif
