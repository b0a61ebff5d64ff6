#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ergo::mf {

// Direct estimation of the multifractal singularity spectrum from bin
// proportions of a nonnegative series. For each moment order q, bin
// proportions P_i(L) are reweighted into masses mu_i(q,L) proportional to
// P_i^q; alpha(q) and f(q) are the slopes of sum(mu ln P) and sum(mu ln mu)
// against ln L. A q belongs to the spectrum only when both regressions are
// tight (Pearson r above the acceptance threshold). The spectrum width
// delta_alpha is max - min of alpha over accepted q.

struct MfParams {
  double q_min = -5.0;
  double q_max = 5.0;
  double q_step = 0.25;
  double r_threshold = 0.995;
  std::size_t min_scale = 4;
  std::size_t max_scale_divisor = 8;  // scales up to length/divisor
};

/// Proportion of signal per nonoverlapping bin of length L: bin sum divided
/// by the sum over all covered samples (floor(n/L) full bins), so the
/// proportions always total 1. Throws on negative values (unsigned
/// convention violated) and on an all-zero covered range.
std::vector<double> bin_proportions(std::span<const double> series,
                                    std::size_t bin_length);

/// mu_i(q) = P_i^q / sum_j P_j^q. Requires all proportions > 0 (zero bins
/// pre-filtered). Throws ExtremeQError when the direct power computation
/// over/underflows to a non-normalizable result.
std::vector<double> masses(std::span<const double> proportions, double q);

struct AlphaF {
  double alpha = 0.0;
  double f = 0.0;
  double r_alpha = 0.0;
  double r_f = 0.0;
};

/// alpha(q), f(q) and their regression correlations from >= 3 scales.
/// Zero-valued bins are dropped from both sums at each scale. Throws
/// InsufficientScalesError when fewer than 3 scales survive.
AlphaF alpha_f_for_q(std::span<const double> series, double q,
                     std::span<const std::size_t> scales);

struct MultifractalSpectrum {
  std::vector<double> q_grid;
  std::vector<double> alpha;
  std::vector<double> f_alpha;
  std::vector<double> r_alpha;
  std::vector<double> r_f;
  std::vector<bool> accepted;      // r_alpha and r_f both above threshold
  double delta_alpha = 0.0;        // over accepted q only
  std::size_t dropped_q = 0;       // extreme-q drops
  std::size_t dropped_zero_bins = 0;
  bool monotonicity_warning = false;  // alpha(q) increased beyond slack
};

/// Evaluates alpha_f_for_q across a q grid and applies the acceptance gate.
/// Throws UndefinedDescriptorError when fewer than 2 q values are accepted.
MultifractalSpectrum spectrum(std::span<const double> series,
                              std::span<const double> q_grid,
                              std::span<const std::size_t> scales,
                              double r_threshold);

/// Convenience form: q grid and dyadic scales from params.
MultifractalSpectrum spectrum(std::span<const double> series,
                              const MfParams& params = {});

/// Inclusive arithmetic q grid.
std::vector<double> make_q_grid(double q_min, double q_max, double q_step);

/// Powers of 2 from min_scale up to n / divisor.
std::vector<std::size_t> dyadic_scales(std::size_t n, std::size_t min_scale = 4,
                                       std::size_t divisor = 8);

}  // namespace ergo::mf
