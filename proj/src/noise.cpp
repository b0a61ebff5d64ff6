#include "ergo/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "ergo/fft.hpp"
#include "ergo/rng.hpp"
#include "ergo/stats.hpp"

namespace ergo::noise {

namespace {

// Distinct stream tags so white and pink draws from the same seed are
// uncorrelated.
constexpr std::uint64_t kWhiteStream = 1;
constexpr std::uint64_t kPinkStream = 2;
constexpr std::uint64_t kShuffleStream = 3;
constexpr std::uint64_t kGambleStream = 4;

}  // namespace

TimeSeries gen_white(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("gen_white: n must be >= 1");
  Rng rng(derive_seed(seed, kWhiteStream));
  TimeSeries out;
  out.values.resize(n);
  for (double& v : out.values) v = rng.gaussian();
  out.meta.generator = "white";
  out.meta.seed = seed;
  return out;
}

TimeSeries gen_pink(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("gen_pink: n must be >= 1");
  Rng rng(derive_seed(seed, kPinkStream));
  TimeSeries out;
  out.meta.generator = "pink";
  out.meta.seed = seed;
  out.meta.add_tag("unit_variance");
  out.values.resize(n);
  for (double& v : out.values) v = rng.gaussian();
  if (n == 1) return out;  // no resolvable spectrum to shape

  auto spec = rfft(out.values);
  spec[0] = 0.0;  // zero-frequency amplitude removed
  for (std::size_t k = 1; k < spec.size(); ++k)
    spec[k] /= std::sqrt(static_cast<double>(k));
  out.values = irfft(spec, n);

  const double m = mean(out.values);
  const double s = std::sqrt(variance(out.values));
  if (s > 0.0)
    for (double& v : out.values) v = (v - m) / s;
  return out;
}

TimeSeries shuffle(const TimeSeries& series, std::uint64_t seed) {
  validate(series);
  Rng rng(derive_seed(seed, kShuffleStream));
  TimeSeries out = series;
  // Fisher-Yates, back to front.
  for (std::size_t i = out.values.size() - 1; i > 0; --i)
    std::swap(out.values[i], out.values[rng.below(i + 1)]);
  out.meta.add_tag("shuffled");
  return out;
}

TimeSeries unsign(const TimeSeries& series) {
  TimeSeries out = series;
  for (double& v : out.values) v = std::abs(v);
  out.meta.add_tag("unsigned");
  return out;
}

std::uint64_t gamble_flip_stream(std::uint64_t seed) {
  return derive_seed(seed, kGambleStream);
}

TimeSeries gamble_trajectory(const GambleParams& params, std::uint64_t seed) {
  if (params.rounds == 0)
    throw std::invalid_argument("gamble: rounds must be >= 1");
  if (params.loss_fraction <= 0.0 || params.loss_fraction >= 1.0)
    throw std::invalid_argument("gamble: loss_fraction must be in (0,1)");
  if (params.win_fraction <= 0.0)
    throw std::invalid_argument("gamble: win_fraction must be > 0");
  if (params.initial_wealth <= 0.0)
    throw std::invalid_argument("gamble: initial_wealth must be > 0");

  const double up = 1.0 + params.win_fraction;
  const double down = 1.0 - params.loss_fraction;
  const std::uint64_t stream = gamble_flip_stream(seed);

  TimeSeries out;
  out.values.resize(params.rounds + 1);
  out.values[0] = params.initial_wealth;
  for (std::size_t k = 0; k < params.rounds; ++k) {
    const bool heads = counter_uniform01(stream, k) < 0.5;
    out.values[k + 1] = out.values[k] * (heads ? up : down);
  }
  out.meta.generator = "gamble";
  out.meta.seed = seed;
  return out;
}

}  // namespace ergo::noise
