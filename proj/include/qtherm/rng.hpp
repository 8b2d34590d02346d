#pragma once
// Splittable seeding and self-contained draws. Sampling must reproduce
// byte-identically for a given seed, so bounded draws avoid the standard
// library's unspecified distribution algorithms.

#include <cstdint>
#include <random>
#include <vector>

namespace qtherm {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Engine for sample `index` of the stream rooted at `seed`; samples are
// independent of evaluation order and of how work is divided.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed + index * 0x9E3779B97F4A7C15ULL));
}

// Unbiased draw from {0, ..., bound-1} by rejection.
inline std::uint64_t bounded_uint(std::mt19937_64& eng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = eng();
    if (r >= threshold) return r % bound;
  }
}

inline double uniform_unit(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline void fisher_yates(std::vector<int>& a, std::mt19937_64& eng) {
  for (std::size_t j = a.size(); j > 1; --j)
    std::swap(a[j - 1], a[bounded_uint(eng, j)]);
}

}  // namespace qtherm
