#pragma once

#include <cstdint>
#include <random>

namespace sptree {

/// Deterministic random source. All draws go through fixed bit-level
/// conversions (never distribution objects, whose output is
/// implementation-defined), so sequences are reproducible across standard
/// libraries and platforms.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for one trial of a seeded experiment. The (seed,
  /// trial) pair is mixed through splitmix64 so nearby seeds do not share
  /// prefixes.
  static RandomSource for_trial(std::uint64_t seed, std::uint64_t trial) {
    return RandomSource(mix(seed + 0x632be59bd9b4e019ull * (trial + 1)));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform integer in [lo, hi], inclusive. Modulo bias is negligible for
  /// the small ranges used here.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  bool bernoulli(double p) { return unit() < p; }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace sptree
