#pragma once

#include <cstdint>

#include "whs/rational.hpp"

// Deterministic cross-platform PRNG (splitmix64); std:: distributions are
// implementation-defined, so sampling stays hand-rolled.
namespace whs::detail {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) {
    // Lemire-style scaled reduction; bias is negligible for n << 2^64.
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  long int_in(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

inline Rational random_rational(SplitMix64& rng, long height) {
  long num = rng.int_in(-height, height);
  long den = rng.int_in(1, height);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational random_nonzero_rational(SplitMix64& rng, long height) {
  while (true) {
    Rational r = random_rational(rng, height);
    if (r != 0) return r;
  }
}

}  // namespace whs::detail
