#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ergo {

// Real-input FFT helpers backed by FFTW. Plans are cached per (thread,
// length); plan creation is serialized internally, so these are safe to
// call from worker threads.

/// Forward real-to-complex transform; returns n/2+1 bins (DC..Nyquist).
std::vector<std::complex<double>> rfft(std::span<const double> x);

/// Inverse of rfft, normalized so irfft(rfft(x), n) == x.
std::vector<double> irfft(std::span<const std::complex<double>> spectrum,
                          std::size_t n);

/// |rfft(x)| per bin.
std::vector<double> amplitude_spectrum(std::span<const double> x);

/// Periodogram power |X_k|^2 / n at the positive frequency bins
/// k = 1 .. floor(n/2) (DC excluded).
std::vector<double> periodogram(std::span<const double> x);

}  // namespace ergo
