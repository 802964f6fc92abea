#ifndef TACHSIM_OBSERVABLES_HPP
#define TACHSIM_OBSERVABLES_HPP

#include <vector>

#include "tachsim/spinor_field.hpp"

namespace tachsim {

/// Expectation values of one state at one time. All entries except norm_sq
/// are computed on the internally renormalized state; norm_sq reports the
/// raw squared norm (the post-selection success weight).
struct ObservableRecord {
  double time = 0.0;
  double mean_x = 0.0;
  double mean_p = 0.0;
  double mean_sigma_x = 0.0;
  double mean_sigma_y = 0.0;
  double mean_sigma_z = 0.0;
  double correlation_xz = 0.0; // <x sigma_z> - <x><sigma_z>
  double norm_sq = 1.0;
};

struct ObservableSeries {
  std::vector<ObservableRecord> samples;

  std::size_t size() const { return samples.size(); }
  const ObservableRecord& operator[](std::size_t i) const { return samples[i]; }
};

/// <p> is evaluated spectrally on the momentum grid.
ObservableRecord observables(const SpinorField& field);

} // namespace tachsim

#endif
