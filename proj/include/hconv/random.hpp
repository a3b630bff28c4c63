#ifndef HCONV_RANDOM_HPP
#define HCONV_RANDOM_HPP

#include <cstdint>
#include <random>

namespace hconv {

// std::uniform_real_distribution is implementation-defined, so reports
// seeded through it would differ across standard libraries. These helpers
// only depend on the mt19937_64 bit stream, which the standard pins down.

using Rng = std::mt19937_64;

/// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform on the open interval (0, 1).
inline double uniform_open01(Rng& rng) {
  double u = 0.0;
  while (u == 0.0) u = uniform01(rng);
  return u;
}

inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

}  // namespace hconv

#endif  // HCONV_RANDOM_HPP
