#pragma once

// SplitMix64 stream and the seed-derivation rule used for every randomised
// choice. Nothing reads ambient entropy, so equal seeds give equal runs.

#include <cstdint>

namespace dynkin {

inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ull;
inline constexpr std::uint64_t kSplitMixMul1 = 0xBF58476D1CE4E5B9ull;
inline constexpr std::uint64_t kSplitMixMul2 = 0x94D049BB133111EBull;

constexpr std::uint64_t splitmix_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * kSplitMixMul1;
  z = (z ^ (z >> 27)) * kSplitMixMul2;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kSplitMixGamma;
    return splitmix_finalize(state_);
  }

  /// Uniform integer in [1, range] by rejection (no modulo bias).
  std::uint64_t uniform_positive(std::uint64_t range) {
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range + 1) % range;
    std::uint64_t z = next();
    while (z > limit) z = next();
    return 1 + z % range;
  }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return uniform_positive(bound) - 1; }

 private:
  std::uint64_t state_;
};

/// Stream seed for a task: finalize(finalize(seed + gamma*(a+1)) + gamma*(b+1)).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  const std::uint64_t h = splitmix_finalize(seed + kSplitMixGamma * (a + 1));
  return splitmix_finalize(h + kSplitMixGamma * (b + 1));
}

}  // namespace dynkin
