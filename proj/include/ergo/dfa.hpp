#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ergo::dfa {

// Detrended fluctuation analysis (first order). The series is mean-centered
// and integrated; nonoverlapping bins of each scale are linearly detrended;
// the fluctuation function f(n) is the RMS of the pooled residuals; the
// scaling exponent is the slope of log f(n) against log n.

/// Cumulative sum of deviations from the grand mean. Length preserved;
/// the last element is zero up to rounding.
std::vector<double> integrate_profile(std::span<const double> series);

/// f(n) for one scale: OLS line per nonoverlapping n-length bin (taken from
/// the start; the tail beyond the last full bin is excluded), residual RMS
/// pooled over all covered samples. Requires 4 <= n <= length/4.
double fluctuation(std::span<const double> profile, std::size_t n);

struct ScaleSpec {
  std::size_t min_scale = 4;
  std::size_t max_scale = 0;      // 0 = floor(length/4)
  std::size_t target_count = 15;  // log-spaced, unique after rounding
};

struct DfaResult {
  double hurst = 0.0;                // slope of log f(n) vs log n
  std::vector<std::size_t> scales;   // strictly increasing
  std::vector<double> fluctuations;  // f(n) per scale
  double fit_r2 = 0.0;
  bool low_fit_warning = false;      // fit_r2 < 0.9
};

/// Scaling exponent over a log-spaced scale grid. Throws
/// UndefinedDescriptorError for a constant series and
/// InsufficientScalesError when fewer than 3 scales are usable.
DfaResult hurst(std::span<const double> series, const ScaleSpec& spec = {});

/// Log-spaced unique integer scales in [lo, hi].
std::vector<std::size_t> log_spaced_scales(std::size_t lo, std::size_t hi,
                                           std::size_t count);

}  // namespace ergo::dfa
