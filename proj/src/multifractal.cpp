#include "ergo/multifractal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ergo/errors.hpp"
#include "ergo/stats.hpp"

namespace ergo::mf {

std::vector<double> bin_proportions(std::span<const double> series,
                                    std::size_t bin_length) {
  if (bin_length == 0 || bin_length > series.size())
    throw std::invalid_argument("bin_proportions: invalid bin length");
  for (double v : series)
    if (v < 0.0)
      throw std::invalid_argument("bin_proportions: negative value");

  const std::size_t bins = series.size() / bin_length;
  std::vector<double> sums(bins, 0.0);
  double total = 0.0;
  for (std::size_t b = 0; b < bins; ++b) {
    double s = 0.0;
    for (std::size_t i = 0; i < bin_length; ++i)
      s += series[b * bin_length + i];
    sums[b] = s;
    total += s;
  }
  if (total <= 0.0)
    throw DegenerateInputError("bin_proportions: zero total mass");
  for (double& s : sums) s /= total;
  return sums;
}

std::vector<double> masses(std::span<const double> proportions, double q) {
  std::vector<double> mu(proportions.size());
  double total = 0.0;
  for (std::size_t i = 0; i < proportions.size(); ++i) {
    mu[i] = std::pow(proportions[i], q);
    total += mu[i];
  }
  if (!std::isfinite(total) || total <= 0.0)
    throw ExtremeQError("masses: P^q not normalizable at q=" +
                        std::to_string(q));
  for (double& m : mu) m /= total;
  return mu;
}

namespace {

// Per-scale data shared across the whole q grid: log of the scale and the
// logs of the zero-filtered proportions.
struct ScaleData {
  double log_scale = 0.0;
  std::vector<double> log_p;
};

std::vector<ScaleData> prepare_scales(std::span<const double> series,
                                      std::span<const std::size_t> scales,
                                      std::size_t* dropped_zero_bins) {
  std::vector<ScaleData> data;
  for (std::size_t scale : scales) {
    if (scale == 0 || scale > series.size()) continue;
    std::vector<double> p;
    try {
      p = bin_proportions(series, scale);
    } catch (const DegenerateInputError&) {
      continue;  // scale dropped
    }
    ScaleData d;
    d.log_scale = std::log(static_cast<double>(scale));
    d.log_p.reserve(p.size());
    for (double v : p) {
      if (v > 0.0)
        d.log_p.push_back(std::log(v));
      else if (dropped_zero_bins)
        ++*dropped_zero_bins;
    }
    if (d.log_p.empty()) continue;
    data.push_back(std::move(d));
  }
  return data;
}

// Mirrors the overflow behavior of the direct pow in masses(): q*lnP beyond
// the representable exponent range at every bin makes the direct sum 0/inf.
void check_extreme_q(const std::vector<ScaleData>& data, double q) {
  for (const auto& d : data) {
    double hi = -std::numeric_limits<double>::infinity();
    for (double lp : d.log_p) hi = std::max(hi, q * lp);
    if (hi > 709.0)  // exp overflow
      throw ExtremeQError("alpha_f: P^q overflows at q=" + std::to_string(q));
    if (hi < -745.0)  // every term underflows to zero
      throw ExtremeQError("alpha_f: P^q underflows at q=" + std::to_string(q));
  }
}

AlphaF alpha_f_from_scales(const std::vector<ScaleData>& data, double q) {
  if (data.size() < 3)
    throw InsufficientScalesError("alpha_f: fewer than 3 usable scales");
  check_extreme_q(data, q);

  std::vector<double> log_scales, a_sums, f_sums;
  log_scales.reserve(data.size());
  a_sums.reserve(data.size());
  f_sums.reserve(data.size());
  for (const auto& d : data) {
    // Max-shifted exponentials keep the mass normalization finite at any q.
    double shift = -std::numeric_limits<double>::infinity();
    for (double lp : d.log_p) shift = std::max(shift, q * lp);
    double total = 0.0;
    for (double lp : d.log_p) total += std::exp(q * lp - shift);
    const double log_total = shift + std::log(total);

    double a = 0.0, f = 0.0;
    for (double lp : d.log_p) {
      const double mu = std::exp(q * lp - log_total);
      a += mu * lp;
      f += mu * (q * lp - log_total);
    }
    log_scales.push_back(d.log_scale);
    a_sums.push_back(a);
    f_sums.push_back(f);
  }

  const auto fit_a = linear_fit(log_scales, a_sums);
  const auto fit_f = linear_fit(log_scales, f_sums);
  return AlphaF{fit_a.slope, fit_f.slope, fit_a.r, fit_f.r};
}

}  // namespace

AlphaF alpha_f_for_q(std::span<const double> series, double q,
                     std::span<const std::size_t> scales) {
  const auto data = prepare_scales(series, scales, nullptr);
  return alpha_f_from_scales(data, q);
}

MultifractalSpectrum spectrum(std::span<const double> series,
                              std::span<const double> q_grid,
                              std::span<const std::size_t> scales,
                              double r_threshold) {
  if (r_threshold <= 0.0 || r_threshold >= 1.0)
    throw std::invalid_argument("spectrum: r threshold must be in (0,1)");
  if (q_grid.empty())
    throw std::invalid_argument("spectrum: empty q grid");

  MultifractalSpectrum out;
  const auto data = prepare_scales(series, scales, &out.dropped_zero_bins);
  if (data.size() < 3)
    throw InsufficientScalesError("spectrum: fewer than 3 usable scales");

  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (double q : q_grid) {
    out.q_grid.push_back(q);
    try {
      const AlphaF af = alpha_f_from_scales(data, q);
      out.alpha.push_back(af.alpha);
      out.f_alpha.push_back(af.f);
      out.r_alpha.push_back(af.r_alpha);
      out.r_f.push_back(af.r_f);
      out.accepted.push_back(af.r_alpha > r_threshold && af.r_f > r_threshold);
    } catch (const ExtremeQError&) {
      ++out.dropped_q;
      out.alpha.push_back(nan);
      out.f_alpha.push_back(nan);
      out.r_alpha.push_back(nan);
      out.r_f.push_back(nan);
      out.accepted.push_back(false);
    }
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  std::size_t n_accepted = 0;
  double prev_alpha = 0.0;
  bool have_prev = false;
  for (std::size_t i = 0; i < out.q_grid.size(); ++i) {
    if (!out.accepted[i]) continue;
    ++n_accepted;
    lo = std::min(lo, out.alpha[i]);
    hi = std::max(hi, out.alpha[i]);
    if (have_prev && out.alpha[i] > prev_alpha + 1e-6)
      out.monotonicity_warning = true;
    prev_alpha = out.alpha[i];
    have_prev = true;
  }
  if (n_accepted < 2)
    throw UndefinedDescriptorError("spectrum: fewer than 2 accepted q values");
  out.delta_alpha = hi - lo;
  return out;
}

MultifractalSpectrum spectrum(std::span<const double> series,
                              const MfParams& params) {
  const auto qs = make_q_grid(params.q_min, params.q_max, params.q_step);
  const auto scales =
      dyadic_scales(series.size(), params.min_scale, params.max_scale_divisor);
  return spectrum(series, qs, scales, params.r_threshold);
}

std::vector<double> make_q_grid(double q_min, double q_max, double q_step) {
  if (q_step <= 0.0 || q_max < q_min)
    throw std::invalid_argument("make_q_grid: invalid range");
  std::vector<double> qs;
  const auto count =
      static_cast<std::size_t>(std::floor((q_max - q_min) / q_step + 0.5)) + 1;
  for (std::size_t i = 0; i < count; ++i) qs.push_back(q_min + q_step * i);
  return qs;
}

std::vector<std::size_t> dyadic_scales(std::size_t n, std::size_t min_scale,
                                       std::size_t divisor) {
  std::vector<std::size_t> scales;
  for (std::size_t s = min_scale; divisor > 0 && s <= n / divisor; s *= 2)
    scales.push_back(s);
  return scales;
}

}  // namespace ergo::mf
