#include "tachsim/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace tachsim::fft {
namespace {

// FFTW planning is not thread-safe; execution through the new-array
// interface is. Plans are cached per transform length.
std::mutex plan_mutex;

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

PlanPair& plans_for(std::size_t n) {
  static std::map<std::size_t, PlanPair> cache;
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<std::complex<double>> scratch(n);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  PlanPair pair;
  pair.fwd = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_FORWARD,
                              FFTW_ESTIMATE);
  pair.bwd = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_BACKWARD,
                              FFTW_ESTIMATE);
  return cache.emplace(n, pair).first->second;
}

} // namespace

void forward(std::vector<std::complex<double>>& data) {
  auto& p = plans_for(data.size());
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p.fwd, buf, buf);
}

void inverse(std::vector<std::complex<double>>& data) {
  auto& p = plans_for(data.size());
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p.bwd, buf, buf);
  const double scale = 1.0 / static_cast<double>(data.size());
  for (auto& z : data) z *= scale;
}

void derivative(std::vector<std::complex<double>>& data, double h) {
  const std::size_t n = data.size();
  forward(data);
  const double dk = 2.0 * M_PI / (h * static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    if (2 * k == n) {
      data[k] = 0.0;
      continue;
    }
    const double kk = (k < (n + 1) / 2) ? static_cast<double>(k)
                                        : static_cast<double>(k) - static_cast<double>(n);
    data[k] *= std::complex<double>(0.0, kk * dk);
  }
  inverse(data);
}

} // namespace tachsim::fft
