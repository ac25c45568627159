#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace locgame {

/// Seeded engine used everywhere. mt19937_64's output sequence is fixed by
/// the standard; the helpers below avoid std::*_distribution, whose output
/// differs between standard libraries.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) { return double(rng() >> 11) * 0x1.0p-53; }

inline double uniform_real(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

}  // namespace locgame
