#pragma once

#include <cstdint>
#include <random>

namespace wts {

// Thin wrappers around mt19937_64 so fixtures are reproducible across
// standard-library implementations (uniform_int_distribution is not
// portable bit-for-bit).

inline std::uint64_t rng_u64(std::mt19937_64& g) { return g(); }

// Uniform in [0, n). Modulo bias is irrelevant for the small bounds used here.
inline std::uint64_t rng_below(std::mt19937_64& g, std::uint64_t n) {
  return n == 0 ? 0 : g() % n;
}

// Uniform in [lo, hi] inclusive.
inline long rng_range(std::mt19937_64& g, long lo, long hi) {
  return lo + static_cast<long>(rng_below(g, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline bool rng_bool(std::mt19937_64& g) { return (g() & 1u) != 0; }

// True with probability num/den.
inline bool rng_chance(std::mt19937_64& g, std::uint64_t num, std::uint64_t den) {
  return rng_below(g, den) < num;
}

}  // namespace wts
