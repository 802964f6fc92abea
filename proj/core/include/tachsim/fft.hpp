#ifndef TACHSIM_FFT_HPP
#define TACHSIM_FFT_HPP

#include <complex>
#include <vector>

namespace tachsim::fft {

/// In-place DFT, e^{-ikx} convention (a plane wave e^{+i p x} peaks at +p).
void forward(std::vector<std::complex<double>>& data);

/// In-place inverse DFT including the 1/n normalization.
void inverse(std::vector<std::complex<double>>& data);

/// Spectral derivative of periodic samples with grid spacing h.
/// The Nyquist mode is zeroed.
void derivative(std::vector<std::complex<double>>& data, double h);

} // namespace tachsim::fft

#endif
