#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace aset {

// All random draws in the library go through mt19937_64 plus the helpers
// below. std::*_distribution is avoided on purpose: its output is
// implementation-defined, and seeded runs must replay identically on any
// standard library.
using Rng = std::mt19937_64;

/// Unbiased integer in [0, n), n >= 1. Rejection sampling.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
  std::uint64_t x;
  do {
    x = rng();
  } while (x < threshold);
  return x % n;
}

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(uniform_below(rng, n));
}

/// Integer in [lo, hi], inclusive.
inline int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

/// Real in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

/// Standard normal via Box-Muller (two engine draws per value).
inline double normal(Rng& rng) {
  double u1 = 0.0;
  do {
    u1 = uniform_unit(rng);
  } while (u1 <= 0.0);
  const double u2 = uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

} // namespace aset
