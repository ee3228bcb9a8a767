#pragma once

#include <cstdint>
#include <random>

namespace linkirr {

// All search randomness comes from std::mt19937_64, whose output sequence is
// fixed by the standard. Draws are mapped to ranges by the helpers below
// rather than std::uniform_int_distribution, which varies across standard
// libraries.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of task `index` in search stage `stage`:
/// mix64(mix64(seed) + (stage << 32) + index).
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint32_t stage, std::uint64_t index) {
  return mix64(mix64(seed) + (std::uint64_t{stage} << 32) + index);
}

inline Rng make_stream(std::uint64_t seed, std::uint32_t stage, std::uint64_t index) {
  return Rng(stream_seed(seed, stage, index));
}

/// Uniform integer in [0, bound), bound > 0, by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

inline bool coin(Rng& rng) { return (rng() >> 63) != 0; }

}  // namespace linkirr
