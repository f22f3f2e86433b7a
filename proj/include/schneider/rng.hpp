#pragma once

#include <cstdint>

namespace schneider {

// 64-bit finalizer (Stafford's mix13 variant of splitmix64).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

/// Seedable, splittable random stream. Stream (seed, index) is a pure
/// function of both, so sample i of an experiment can always be generated
/// from its own stream and results do not depend on how samples are
/// distributed over workers. Each stream uses its own odd increment, so
/// distinct streams are never shifted copies of one another.
class RandomStream {
public:
  RandomStream(std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t key = mix64(seed ^ mix64(index * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
    state_ = key;
    inc_ = mix64(key ^ 0xda942042e4dd58b5ULL) | 1ULL;
  }

  std::uint64_t next() {
    state_ += inc_;
    return mix64(state_);
  }

  /// Uniform on [0, n) by rejection; exactly unbiased.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  /// Uniform on [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
  std::uint64_t inc_;
};

}  // namespace schneider
