#pragma once
#include <cstdint>

namespace dynpr {

/// SplitMix64 (Steele, Lea & Flood): 64-bit state, one multiply-shift mix
/// per draw. Chosen for reproducibility — the algorithm is published and
/// trivially portable, so seeded batch generation gives identical output
/// anywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Unbiased draw from [0, bound) via Lemire's multiply-reject method.
  std::uint64_t bounded(std::uint64_t bound) {
    unsigned __int128 m =
        static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double nextDouble() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Deterministic seed derivation for substreams (same mix as SplitMix64).
inline std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 rng(seed ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
  return rng.next();
}

}  // namespace dynpr
