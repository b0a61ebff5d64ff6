#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ergo/noise.hpp"
#include "ergo/rng.hpp"
#include "ergo/stats.hpp"
#include "oracles.hpp"

using namespace ergo;

TEST_CASE("gen_white moments and determinism") {
  const auto series = noise::gen_white(50000, 7);
  REQUIRE(series.size() == 50000);
  // Monte Carlo bounds ~3/sqrt(n) on mean and SD of an N(0,1) sample.
  CHECK(std::abs(mean(series.values)) < 0.02);
  CHECK(std::abs(std::sqrt(variance(series.values)) - 1.0) < 0.02);
  CHECK(std::abs(autocorrelation(series.values, 1)) < 3.0 / std::sqrt(50000.0));

  const auto again = noise::gen_white(50000, 7);
  CHECK(series.values == again.values);  // bitwise

  const auto other = noise::gen_white(50000, 8);
  CHECK(series.values != other.values);

  const auto single = noise::gen_white(1, 3);
  REQUIRE(single.size() == 1);
  CHECK(std::isfinite(single.values[0]));

  CHECK_THROWS_AS(noise::gen_white(0, 1), std::invalid_argument);
}

TEST_CASE("gen_pink spectrum, normalization, determinism") {
  const std::size_t n = 16384;  // power of 2 for the oracle FFT
  const auto series = noise::gen_pink(n, 11);
  REQUIRE(series.size() == n);

  // Normalized to zero mean, unit variance (within float noise).
  CHECK(std::abs(mean(series.values)) < 1e-12);
  CHECK(std::abs(variance(series.values) - 1.0) < 0.01);

  // Periodogram regression oracle: log-log PSD slope -1.0 +/- 0.1 over the
  // middle frequency decades.
  const double slope = oracle::psd_slope(series.values);
  CHECK(slope == doctest::Approx(-1.0).epsilon(0.1));

  const auto again = noise::gen_pink(n, 11);
  CHECK(series.values == again.values);

  CHECK_THROWS_AS(noise::gen_pink(0, 1), std::invalid_argument);
  CHECK(noise::gen_pink(1, 5).size() == 1);
}

TEST_CASE("shuffle preserves the multiset and kills correlations") {
  auto pink = noise::unsign(noise::gen_pink(50000, 3));
  auto shuffled = noise::shuffle(pink, 17);

  auto a = pink.values;
  auto b = shuffled.values;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);  // exact permutation identity
  CHECK(shuffled.meta.has_tag("shuffled"));
  CHECK(std::abs(autocorrelation(shuffled.values, 1)) <
        3.0 / std::sqrt(50000.0));

  TimeSeries one;
  one.values = {4.25};
  CHECK(noise::shuffle(one, 5).values == std::vector<double>{4.25});
}

TEST_CASE("unsign is |.| and commutes with shuffle") {
  TimeSeries t;
  t.values = {-1.0, 2.0, -3.0};
  CHECK(noise::unsign(t).values == std::vector<double>{1.0, 2.0, 3.0});
  CHECK(noise::unsign(t).meta.has_tag("unsigned"));

  TimeSeries nonneg;
  nonneg.values = {0.0, 1.5, 2.0};
  CHECK(noise::unsign(nonneg).values == nonneg.values);  // idempotent values

  const auto white = noise::gen_white(2000, 9);
  const auto a = noise::unsign(noise::shuffle(white, 21));
  const auto b = noise::shuffle(noise::unsign(white), 21);
  CHECK(a.values == b.values);  // |.| commutes with the permutation
}

TEST_CASE("gamble trajectories") {
  noise::GambleParams params;
  params.rounds = 200;

  SUBCASE("always positive, correct length, deterministic") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
      const auto t = noise::gamble_trajectory(params, seed);
      REQUIRE(t.size() == 201);
      CHECK(*std::min_element(t.values.begin(), t.values.end()) > 0.0);
      CHECK(t.values == noise::gamble_trajectory(params, seed).values);
    }
  }

  SUBCASE("log-wealth is a random walk with the two known increments") {
    const auto t = noise::gamble_trajectory(params, 5);
    for (std::size_t k = 1; k < t.size(); ++k) {
      const double inc = std::log(t.values[k]) - std::log(t.values[k - 1]);
      const bool is_win = std::abs(inc - std::log(1.5)) < 1e-9;
      const bool is_loss = std::abs(inc - std::log(0.6)) < 1e-9;
      CHECK((is_win || is_loss));
    }
  }

  SUBCASE("ensemble mean grows like 1.05^k") {
    params.rounds = 30;
    double total = 0.0;
    const std::size_t players = 200000;
    for (std::size_t i = 0; i < players; ++i)
      total += noise::gamble_trajectory(params, derive_seed(77, i)).values[30];
    const double ensemble_mean = total / static_cast<double>(players);
    CHECK(ensemble_mean ==
          doctest::Approx(std::pow(1.05, 30)).epsilon(0.15));
  }

  SUBCASE("invalid params") {
    noise::GambleParams bad;
    bad.rounds = 0;
    CHECK_THROWS_AS(noise::gamble_trajectory(bad, 1), std::invalid_argument);
    bad.rounds = 10;
    bad.loss_fraction = 1.0;
    CHECK_THROWS_AS(noise::gamble_trajectory(bad, 1), std::invalid_argument);
  }
}

TEST_CASE("rng basics") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.gaussian() == b.gaussian());
  Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(c.below(10) < 10);
  }
  CHECK(derive_seed(1, 2) != derive_seed(2, 1));
  CHECK(derive_seed(1, 2, 3) == derive_seed(derive_seed(1, 2), 3));
}
