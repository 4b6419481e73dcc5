#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace ssc {

// std::mt19937_64 output is pinned by the standard, so seeded draws are
// reproducible across platforms and standard libraries. All derived draws
// below avoid std::uniform_*_distribution and std::shuffle, whose results are
// implementation-defined.
using Rng = std::mt19937_64;

// Uniform draw from [0; bound), unbiased via tail rejection.
inline std::uint64_t bounded_rand(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t cutoff = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= cutoff) return x % bound;
  }
}

// Uniform double in [0, 1) with 53 random bits.
inline double unit_real(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// In-place Fisher-Yates.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(bounded_rand(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

// Floyd's sampling: k distinct values from [0; universe), returned sorted.
inline std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t universe,
                                                  std::uint64_t k) {
  if (k > universe) throw std::invalid_argument("sample size exceeds the universe");
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(k) * 2 + 1);
  for (std::uint64_t j = universe - k; j < universe; ++j) {
    const std::uint64_t t = bounded_rand(rng, j + 1);
    if (!seen.insert(t).second) seen.insert(j);
  }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ssc
