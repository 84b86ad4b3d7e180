#pragma once

#include <cstdint>
#include <random>

namespace curvewalk {

// splitmix64, the usual seed mixer.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Replica r of an experiment seeded with `seed` draws from an engine seeded
// with child_seed(seed, r). The mixing is fixed so replica sets are
// reproducible and independent of evaluation order.
inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t r) {
  return splitmix64(splitmix64(seed) ^ splitmix64(r + 1));
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

}  // namespace curvewalk
