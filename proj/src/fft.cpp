#include "ergo/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace ergo {

namespace {

// FFTW's planner is not thread-safe; executions on distinct buffers are.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// Per-thread plan/buffer pair for one transform length. Buffers come from
// fftw_malloc so alignment matches what the plan was created for.
struct SizePlans {
  std::size_t n = 0;
  double* real = nullptr;
  fftw_complex* cplx = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;

  explicit SizePlans(std::size_t length) : n(length) {
    real = fftw_alloc_real(n);
    cplx = fftw_alloc_complex(n / 2 + 1);
    std::lock_guard<std::mutex> lock(planner_mutex());
    forward = fftw_plan_dft_r2c_1d(static_cast<int>(n), real, cplx,
                                   FFTW_ESTIMATE);
    inverse = fftw_plan_dft_c2r_1d(static_cast<int>(n), cplx, real,
                                   FFTW_ESTIMATE);
  }

  SizePlans(const SizePlans&) = delete;
  SizePlans& operator=(const SizePlans&) = delete;

  ~SizePlans() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (inverse) fftw_destroy_plan(inverse);
    fftw_free(real);
    fftw_free(cplx);
  }
};

SizePlans& plans_for(std::size_t n) {
  thread_local std::unordered_map<std::size_t, std::unique_ptr<SizePlans>>
      cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<SizePlans>(n);
  return *slot;
}

}  // namespace

std::vector<std::complex<double>> rfft(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("rfft: empty input");
  auto& p = plans_for(x.size());
  std::memcpy(p.real, x.data(), x.size() * sizeof(double));
  fftw_execute(p.forward);
  std::vector<std::complex<double>> out(x.size() / 2 + 1);
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = {p.cplx[k][0], p.cplx[k][1]};
  return out;
}

std::vector<double> irfft(std::span<const std::complex<double>> spectrum,
                          std::size_t n) {
  if (n == 0 || spectrum.size() != n / 2 + 1)
    throw std::invalid_argument("irfft: spectrum size does not match n");
  auto& p = plans_for(n);
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    p.cplx[k][0] = spectrum[k].real();
    p.cplx[k][1] = spectrum[k].imag();
  }
  fftw_execute(p.inverse);
  std::vector<double> out(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = p.real[i] * scale;
  return out;
}

std::vector<double> amplitude_spectrum(std::span<const double> x) {
  auto spec = rfft(x);
  std::vector<double> amp(spec.size());
  for (std::size_t k = 0; k < spec.size(); ++k) amp[k] = std::abs(spec[k]);
  return amp;
}

std::vector<double> periodogram(std::span<const double> x) {
  auto spec = rfft(x);
  const std::size_t half = x.size() / 2;
  std::vector<double> power(half);
  const double scale = 1.0 / static_cast<double>(x.size());
  for (std::size_t k = 1; k <= half; ++k)
    power[k - 1] = std::norm(spec[k]) * scale;
  return power;
}

}  // namespace ergo
