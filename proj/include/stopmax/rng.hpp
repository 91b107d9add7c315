#pragma once

#include <cstdint>

namespace stopmax {

// 64-bit finalizer (MurmurHash3 fmix64).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 33;
  z *= 0xff51afd7ed558ccdULL;
  z ^= z >> 33;
  z *= 0xc4ceb9fe1a85ec53ULL;
  z ^= z >> 33;
  return z;
}

// Counter-based generator in the splitmix64 family: the draw at a given
// (seed, counter) pair is a pure function of the pair, so partitioning the
// counter range across workers cannot change any value.
constexpr std::uint64_t counter_u64(std::uint64_t seed, std::uint64_t counter) {
  return mix64(mix64(seed) + (counter + 1) * 0x9e3779b97f4a7c15ULL);
}

// Uniform double in [0, 1), 53 mantissa bits.
constexpr double counter_double(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(counter_u64(seed, counter) >> 11) * 0x1.0p-53;
}

// Stateful convenience wrapper over the counter stream.
struct Rng {
  std::uint64_t seed = 0;
  std::uint64_t counter = 0;

  explicit Rng(std::uint64_t s = 0) : seed(s) {}
  std::uint64_t next_u64() { return counter_u64(seed, counter++); }
  double next() { return counter_double(seed, counter++); }
};

}  // namespace stopmax
