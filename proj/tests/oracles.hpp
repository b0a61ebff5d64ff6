#pragma once

// Test-side oracles, independent of the library implementation paths they
// check. The FFT here is a hand-rolled radix-2 transform (the library uses
// FFTW); fGn comes from circulant embedding; the binomial cascade and its
// singularity spectrum have closed forms.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

// Half-normal |N(0,1)| moments.
inline constexpr double kHalfNormalMean = 0.79788456080286541;   // sqrt(2/pi)
inline constexpr double kHalfNormalSd = 0.60281026035637359;     // sqrt(1-2/pi)
inline constexpr double kHalfNormalCv = 0.75558184147553221;     // sd/mean

// --- radix-2 FFT ------------------------------------------------------------

inline void fft_inplace(std::vector<std::complex<double>>& a, bool invert) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("oracle fft: size must be a power of 2");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = 2.0 * kPi / static_cast<double>(len) * (invert ? -1 : 1);
    const std::complex<double> wlen(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const auto u = a[i + k];
        const auto v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (invert)
    for (auto& v : a) v /= static_cast<double>(n);
}

// --- naive DFT amplitudes (any length, O(n^2)) -------------------------------

inline std::vector<double> dft_amplitudes(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<double> amp(n / 2 + 1);
  for (std::size_t k = 0; k < amp.size(); ++k) {
    double re = 0.0, im = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      const double phase = -2.0 * kPi * static_cast<double>(k) *
                           static_cast<double>(t) / static_cast<double>(n);
      re += x[t] * std::cos(phase);
      im += x[t] * std::sin(phase);
    }
    amp[k] = std::hypot(re, im);
  }
  return amp;
}

// --- log-log periodogram slope (power-of-2 length) ---------------------------

inline double psd_slope(std::span<const double> x) {
  std::vector<std::complex<double>> a(x.begin(), x.end());
  fft_inplace(a, false);
  const std::size_t half = x.size() / 2;
  // Band-average log-power over log-spaced frequency bands across the middle
  // decades: the lowest ~1.5 decades (worst periodogram variance) and the
  // top octave are excluded.
  std::vector<double> log_f, log_p;
  std::size_t lo = std::max<std::size_t>(4, x.size() / 150);
  while (lo < half / 2) {
    const std::size_t hi = std::max(lo + 1, lo * 5 / 4);
    double power = 0.0;
    std::size_t count = 0;
    for (std::size_t k = lo; k < hi && k < half / 2; ++k, ++count)
      power += std::norm(a[k]);
    if (count > 0) {
      log_f.push_back(std::log(0.5 * static_cast<double>(lo + hi)));
      log_p.push_back(std::log(power / static_cast<double>(count)));
    }
    lo = hi;
  }
  // OLS slope.
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < log_f.size(); ++i) {
    mx += log_f[i];
    my += log_p[i];
  }
  mx /= static_cast<double>(log_f.size());
  my /= static_cast<double>(log_f.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < log_f.size(); ++i) {
    sxx += (log_f[i] - mx) * (log_f[i] - mx);
    sxy += (log_f[i] - mx) * (log_p[i] - my);
  }
  return sxy / sxx;
}

// --- fractional Gaussian noise via circulant embedding -----------------------

inline std::vector<double> davies_harte_fgn(std::size_t n, double hurst,
                                            std::uint32_t seed) {
  if ((n & (n - 1)) != 0)
    throw std::invalid_argument("oracle fgn: n must be a power of 2");
  const std::size_t m = 2 * n;
  auto gamma = [hurst](double k) {
    const double h2 = 2.0 * hurst;
    return 0.5 * (std::pow(std::abs(k + 1.0), h2) -
                  2.0 * std::pow(std::abs(k), h2) +
                  std::pow(std::abs(k - 1.0), h2));
  };
  std::vector<std::complex<double>> c(m);
  for (std::size_t k = 0; k <= n; ++k) c[k] = gamma(static_cast<double>(k));
  for (std::size_t k = 1; k < n; ++k) c[m - k] = c[k];
  fft_inplace(c, false);  // eigenvalues of the circulant, real and >= 0

  std::mt19937 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::complex<double>> a(m);
  a[0] = std::sqrt(std::max(0.0, c[0].real())) * normal(rng);
  a[n] = std::sqrt(std::max(0.0, c[n].real())) * normal(rng);
  for (std::size_t k = 1; k < n; ++k) {
    const double lambda = std::max(0.0, c[k].real());
    const std::complex<double> z(normal(rng), normal(rng));
    a[k] = std::sqrt(lambda / 2.0) * z;
    a[m - k] = std::conj(a[k]);
  }
  fft_inplace(a, false);
  std::vector<double> out(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i].real() * scale;
  return out;
}

// --- binomial cascade ---------------------------------------------------------

/// Deterministic binomial measure of 2^depth samples: the mass of sample i
/// is the product over the binary digits of i of p (digit 0) or 1-p (digit 1).
inline std::vector<double> binomial_cascade(double p, int depth) {
  std::vector<double> mass{1.0};
  for (int level = 0; level < depth; ++level) {
    std::vector<double> next(mass.size() * 2);
    for (std::size_t i = 0; i < mass.size(); ++i) {
      next[2 * i] = mass[i] * p;
      next[2 * i + 1] = mass[i] * (1.0 - p);
    }
    mass = std::move(next);
  }
  return mass;
}

/// Analytic singularity strength of the binomial measure at moment order q.
inline double cascade_alpha(double p, double q) {
  const double pq = std::pow(p, q);
  const double rq = std::pow(1.0 - p, q);
  return -(pq * std::log2(p) + rq * std::log2(1.0 - p)) / (pq + rq);
}

/// Analytic Hausdorff dimension f(q) of the binomial measure.
inline double cascade_f(double p, double q) {
  const double pq = std::pow(p, q);
  const double rq = std::pow(1.0 - p, q);
  const double z = pq + rq;
  // f = q * alpha(q) + log2(z)  (Legendre transform of tau(q) = -log2 z)
  return q * cascade_alpha(p, q) + std::log2(z);
}

}  // namespace oracle
