#pragma once

#include <cstdint>
#include <initializer_list>

namespace vho {

// Counter-based uniform stream keyed by a 64-bit seed. Each draw hashes
// (seed, counters...) through the SplitMix64 finalizer, so a value depends
// only on its coordinates and never on how many draws came before it.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t seed) : key_(mix(seed ^ 0x6A09E667F3BCC909ULL)) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t bits(std::initializer_list<std::uint64_t> counters) const {
    std::uint64_t h = key_;
    for (std::uint64_t c : counters) h = mix(h ^ mix(c));
    return h;
  }

  // Uniform double in [0, 1) with 53 random bits.
  constexpr double unit(std::initializer_list<std::uint64_t> counters) const {
    return static_cast<double>(bits(counters) >> 11) * 0x1.0p-53;
  }

  constexpr double uniform(double lo, double hi, std::initializer_list<std::uint64_t> counters) const {
    if (lo == hi) return lo;
    return lo + unit(counters) * (hi - lo);
  }

 private:
  std::uint64_t key_;
};

// Seed of the run-th independent replication under a base seed.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t run) {
  return CounterRng(base).bits({0x52554EULL, run});
}

}  // namespace vho
