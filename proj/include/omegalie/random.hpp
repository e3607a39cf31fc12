#pragma once

#include <cstdint>
#include <random>

namespace omegalie {

/// Uniform draw from [0, bound) by rejection, so results depend only on the
/// engine's output sequence and not on the standard library's distributions.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Uniform integer in [lo, hi].
inline long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(bounded_draw(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace omegalie
