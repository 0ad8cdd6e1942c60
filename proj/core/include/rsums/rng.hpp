#pragma once

#include <cstdint>

namespace rsums {

/**
 * SplitMix64 (Steele, Lea & Flood; the java.util.SplittableRandom mixer).
 * Chosen for surveys because it is tiny, fully portable, and supports O(1)
 * derivation of independent per-item streams: stream i is seeded with the
 * (i+1)-th raw output of the base sequence, which is a single mix of
 * seed + (i+1) * gamma. Identical seeds give identical draws on every
 * platform, which is what makes survey reports byte-reproducible.
 */
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += kGamma;
    return mix(state_);
  }

  /// Seed of the independent stream for work item `index` under `seed`.
  static uint64_t stream_seed(uint64_t seed, uint64_t index) {
    return mix(seed + (index + 1) * kGamma);
  }

  /// Unbiased uniform draw in [0, n) via bitmask rejection. n >= 1.
  uint64_t below(uint64_t n) {
    if (n <= 1) return 0;
    const uint64_t mask = ~uint64_t{0} >> __builtin_clzll((n - 1) | 1);
    uint64_t r;
    do {
      r = next() & mask;
    } while (r >= n);
    return r;
  }

 private:
  static constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  uint64_t state_;
};

}  // namespace rsums
