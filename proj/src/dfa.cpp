#include "ergo/dfa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ergo/errors.hpp"
#include "ergo/stats.hpp"

namespace ergo::dfa {

std::vector<double> integrate_profile(std::span<const double> series) {
  if (series.size() < 2)
    throw std::invalid_argument("integrate_profile: length must be >= 2");
  const double grand_mean = mean(series);
  std::vector<double> profile(series.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    acc += series[i] - grand_mean;
    profile[i] = acc;
  }
  return profile;
}

double fluctuation(std::span<const double> profile, std::size_t n) {
  const std::size_t len = profile.size();
  if (n < 4 || n > len / 4)
    throw std::invalid_argument("fluctuation: scale out of range [4, N/4]");

  const std::size_t bins = len / n;
  // x coordinates are 0..n-1 inside every bin, so their moments are shared.
  const double nn = static_cast<double>(n);
  const double sx = nn * (nn - 1.0) / 2.0;
  const double sxx = nn * (nn - 1.0) * (2.0 * nn - 1.0) / 6.0;
  const double denom = nn * sxx - sx * sx;

  double pooled_ss = 0.0;
  for (std::size_t b = 0; b < bins; ++b) {
    const double* y = profile.data() + b * n;
    double sy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sy += y[i];
      sxy += static_cast<double>(i) * y[i];
    }
    const double slope = (nn * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / nn;
    for (std::size_t i = 0; i < n; ++i) {
      const double resid = y[i] - (intercept + slope * static_cast<double>(i));
      pooled_ss += resid * resid;
    }
  }
  return std::sqrt(pooled_ss / static_cast<double>(bins * n));
}

std::vector<std::size_t> log_spaced_scales(std::size_t lo, std::size_t hi,
                                           std::size_t count) {
  std::vector<std::size_t> scales;
  if (hi < lo || count == 0) return scales;
  if (count == 1 || lo == hi) return {lo};
  const double llo = std::log(static_cast<double>(lo));
  const double lhi = std::log(static_cast<double>(hi));
  for (std::size_t i = 0; i < count; ++i) {
    const double t = llo + (lhi - llo) * static_cast<double>(i) /
                               static_cast<double>(count - 1);
    auto s = static_cast<std::size_t>(std::llround(std::exp(t)));
    s = std::clamp(s, lo, hi);
    if (scales.empty() || s > scales.back()) scales.push_back(s);
  }
  return scales;
}

DfaResult hurst(std::span<const double> series, const ScaleSpec& spec) {
  const std::size_t len = series.size();
  if (len < 16)
    throw std::invalid_argument("dfa: series length must be >= 16");

  const double first = series[0];
  bool constant = true;
  for (double v : series)
    if (v != first) {
      constant = false;
      break;
    }
  if (constant)
    throw UndefinedDescriptorError("dfa: constant series has no exponent");

  const std::size_t max_scale =
      spec.max_scale > 0 ? std::min(spec.max_scale, len / 4) : len / 4;
  const auto candidates =
      log_spaced_scales(spec.min_scale, max_scale, spec.target_count);

  const auto profile = integrate_profile(series);

  DfaResult result;
  std::vector<double> log_n, log_f;
  for (std::size_t n : candidates) {
    const double f = fluctuation(profile, n);
    if (!(f > 0.0)) continue;  // detrending removed everything at this scale
    result.scales.push_back(n);
    result.fluctuations.push_back(f);
    log_n.push_back(std::log(static_cast<double>(n)));
    log_f.push_back(std::log(f));
  }
  if (result.scales.size() < 3)
    throw InsufficientScalesError("dfa: fewer than 3 usable scales");

  const auto fit = linear_fit(log_n, log_f);
  result.hurst = fit.slope;
  result.fit_r2 = fit.r2;
  result.low_fit_warning = fit.r2 < 0.9;
  return result;
}

}  // namespace ergo::dfa
