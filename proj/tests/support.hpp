#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ssc/pattern.hpp"
#include "ssc/rng.hpp"

namespace ssc::test {

// The six-state demo pair used across the suites, triplets in column-major
// order. Columns 7 and 8 are the two input columns.
inline PatternTriplets demo6_triplets() {
  PatternTriplets t;
  t.states = 6;
  t.inputs = 2;
  t.entries = {{3, 1}, {5, 1}, {2, 2}, {1, 4}, {6, 4}, {4, 6}, {2, 7}, {3, 7}, {6, 8}};
  return t;
}

// Pattern from a bitmask over the n x (n+r) grid, cells numbered
// column-major; entries come out in column-major order.
inline PatternTriplets pattern_from_mask(int n, int r, std::uint64_t mask) {
  PatternTriplets t;
  t.states = n;
  t.inputs = r;
  const int cells = n * (n + r);
  for (int c = 0; c < cells; ++c)
    if (mask >> c & 1) t.entries.push_back({c % n + 1, c / n + 1});
  return t;
}

// nnz distinct uniform positions, column-major order.
inline PatternTriplets random_pattern(Rng& rng, int n, int r, int nnz) {
  PatternTriplets t;
  t.states = n;
  t.inputs = r;
  const std::uint64_t grid = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n + r);
  for (const std::uint64_t id : sample_distinct(rng, grid, static_cast<std::uint64_t>(nnz)))
    t.entries.push_back({static_cast<int>(id % static_cast<std::uint64_t>(n)) + 1,
                         static_cast<int>(id / static_cast<std::uint64_t>(n)) + 1});
  return t;
}

// Canonical position set of a compressed pattern, for order-insensitive
// comparisons.
inline std::vector<Entry> sorted_entries(const CcsPattern& x) {
  std::vector<Entry> out;
  out.reserve(x.row_ind.size());
  for (int j = 1; j <= x.cols; ++j)
    for (int k = x.col_ptr[static_cast<std::size_t>(j) - 1];
         k < x.col_ptr[static_cast<std::size_t>(j)]; ++k)
      out.push_back({x.row_ind[static_cast<std::size_t>(k) - 1], j});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ssc::test
