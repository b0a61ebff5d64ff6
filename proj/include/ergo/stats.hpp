#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace ergo {

inline double mean(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

/// Population variance (divisor N), two-pass.
inline double variance(std::span<const double> x) {
  const double m = mean(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(x.size());
}

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r = 0.0;   // Pearson correlation
  double r2 = 0.0;  // coefficient of determination
};

/// Ordinary least squares y = a + b x. Requires xs.size() == ys.size() >= 2.
inline LinearFit linear_fit(std::span<const double> xs,
                            std::span<const double> ys) {
  const std::size_t n = xs.size();
  const double mx = mean(xs);
  const double my = mean(ys);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  LinearFit fit;
  if (sxx <= 0.0) return fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (syy <= 0.0) {
    // Perfectly flat response is a perfect fit.
    fit.r = 0.0;
    fit.r2 = 1.0;
    return fit;
  }
  fit.r = sxy / std::sqrt(sxx * syy);
  fit.r2 = fit.r * fit.r;
  return fit;
}

/// Autocorrelation at a given lag (population normalization).
inline double autocorrelation(std::span<const double> x, std::size_t lag) {
  const double m = mean(x);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    den += (x[i] - m) * (x[i] - m);
    if (i + lag < x.size()) num += (x[i] - m) * (x[i + lag] - m);
  }
  return den > 0.0 ? num / den : 0.0;
}

}  // namespace ergo
