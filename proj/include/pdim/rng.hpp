#pragma once
#include <cstdint>

namespace pdim {

// SplitMix64 (Steele/Lea/Vigna). Chosen over std::mt19937 because the whole
// sequence, including bounded draws, must be bit-identical across platforms
// and standard libraries; std::uniform_int_distribution is not.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    return mix(state);
  }

  // derived independent stream; stable function of (state, stream)
  SplitMix64 split(std::uint64_t stream) const {
    return SplitMix64(mix(state + 0x9e3779b97f4a7c15ull * (stream + 1)));
  }

  // unbiased draw from [0, n) by rejection
  std::uint64_t bounded(std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  // uniform double in [0, 1)
  double unit() { return double(next() >> 11) * 0x1.0p-53; }
};

}  // namespace pdim
