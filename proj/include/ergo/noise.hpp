#pragma once

#include <cstdint>

#include "ergo/time_series.hpp"

namespace ergo::noise {

/// n i.i.d. draws from N(0,1). Deterministic per (n, seed).
TimeSeries gen_white(std::size_t n, std::uint64_t seed);

/// 1/f noise by spectral synthesis: Gaussian white noise is transformed to
/// the frequency domain, each amplitude at bin k >= 1 is scaled by
/// 1/sqrt(k), the DC amplitude is zeroed, and the inverse transform is
/// normalized to zero mean and unit variance (normalization recorded in
/// provenance). Deterministic per (n, seed).
TimeSeries gen_pink(std::size_t n, std::uint64_t seed);

/// Uniform random permutation (Fisher-Yates) of the values; preserves the
/// value multiset exactly and appends the "shuffled" tag.
TimeSeries shuffle(const TimeSeries& series, std::uint64_t seed);

/// Element-wise absolute value; appends the "unsigned" tag.
TimeSeries unsign(const TimeSeries& series);

struct GambleParams {
  double win_fraction = 0.5;
  double loss_fraction = 0.4;
  double initial_wealth = 1.0;
  std::size_t rounds = 0;
};

/// Multiplicative coin-flip wealth trajectory: heads multiplies wealth by
/// (1 + win_fraction), tails by (1 - loss_fraction), fair coin. Returns
/// rounds+1 values starting at initial_wealth. Flips are counter-based, so
/// trajectory k of an ensemble seeded with derive_seed(seed, k) is
/// independent of evaluation order.
TimeSeries gamble_trajectory(const GambleParams& params, std::uint64_t seed);

/// Counter stream feeding the coin flips of gamble_trajectory(params, seed);
/// flip k is counter_uniform01(stream, k) < 0.5. Lets ensemble statistics
/// advance many players round by round without per-player generator state.
std::uint64_t gamble_flip_stream(std::uint64_t seed);

}  // namespace ergo::noise
