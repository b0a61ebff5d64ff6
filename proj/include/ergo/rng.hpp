#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ergo {

// Deterministic seeding and sampling. All distributions are implemented
// explicitly on top of mt19937_64 so that identical seeds give identical
// sequences on every platform (std::normal_distribution makes no such
// promise).

/// SplitMix64 finalizer. Bijective 64-bit mix, good avalanche.
inline std::uint64_t hash64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Derives a per-stream subseed from a base seed. Chaining calls gives a
/// tree of independent streams: derive_seed(derive_seed(master, r), k).
/// Ensembles seeded this way are reproducible independent of the order in
/// which realizations are computed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return hash64(base ^ hash64(stream + 0x632BE59BD9B4E019ull));
}

template <typename... Rest>
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                                 Rest... rest) {
  return derive_seed(derive_seed(base, stream), rest...);
}

/// Stateless counter-based uniform in [0,1). One value per (stream, index)
/// pair; used where per-element RNG state would be wasteful (gamble flips).
inline double counter_uniform01(std::uint64_t stream, std::uint64_t index) {
  return static_cast<double>(hash64(stream ^ hash64(index)) >> 11) *
         0x1.0p-53;
}

/// Seeded generator with explicit, portable distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0,1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (pairwise, spare cached).
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    // log1p(-u1) is log(1-u1); 1-u1 in (0,1] so the log is always finite.
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  /// Unbiased integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = eng_();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ergo
