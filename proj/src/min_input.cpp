#include "ssc/min_input.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "ssc/errors.hpp"
#include "ssc/verifier.hpp"

namespace ssc {

namespace {

// `cap + 1` without wrapping when cap is the largest representable value.
std::uint64_t saturate_above(std::uint64_t cap) {
  return cap == UINT64_MAX ? cap : cap + 1;
}

// C(k + r - 1, r) capped above `cap` (number of size-r multisets over k items).
std::uint64_t multiset_count(std::uint64_t k, int r, std::uint64_t cap) {
  if (k == 0) return 0;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * (k - 1 + static_cast<std::uint64_t>(i)) / static_cast<unsigned>(i);
    if (acc > cap) return saturate_above(cap);
  }
  return static_cast<std::uint64_t>(acc);
}

// Number of nonzero column patterns over `n` rows with at most `cap_stars`
// stars (all of them when unrestricted), capped above `cap`.
std::uint64_t count_columns(int n, const std::optional<int>& cap_stars, std::uint64_t cap) {
  if (!cap_stars) {
    if (n >= 63) return saturate_above(cap);
    const std::uint64_t k = (1ULL << n) - 1;
    return k > cap ? saturate_above(cap) : k;
  }
  unsigned __int128 total = 0;
  const int top = std::min(*cap_stars, n);
  for (int s = 1; s <= top; ++s) {
    unsigned __int128 binom = 1;
    for (int i = 1; i <= s; ++i)
      binom = binom * static_cast<unsigned>(n - s + i) / static_cast<unsigned>(i);
    total += binom;
    if (total > cap) return saturate_above(cap);
  }
  return static_cast<std::uint64_t>(total);
}

// Advances a non-decreasing index tuple over [0; k); false once exhausted.
bool next_multiset(std::vector<int>& idx, int k) {
  for (int pos = static_cast<int>(idx.size()) - 1; pos >= 0; --pos) {
    if (idx[static_cast<std::size_t>(pos)] + 1 < k) {
      const int v = idx[static_cast<std::size_t>(pos)] + 1;
      for (std::size_t q = static_cast<std::size_t>(pos); q < idx.size(); ++q) idx[q] = v;
      return true;
    }
  }
  return false;
}

// Masks in increasing numeric order; bit i-1 stands for row i.
std::vector<std::uint64_t> column_family(int n, const std::optional<int>& cap_stars) {
  std::vector<std::uint64_t> masks;
  if (!cap_stars) {
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) masks.push_back(mask);
    return masks;
  }
  const int top = std::min(*cap_stars, n);
  for (int s = 1; s <= top; ++s) {
    // Gosper's hack walks fixed-popcount masks in ascending order
    std::uint64_t mask = (1ULL << s) - 1;
    while (mask < (1ULL << n)) {
      masks.push_back(mask);
      const std::uint64_t c = mask & (0 - mask);
      const std::uint64_t rr = mask + c;
      mask = (((rr ^ mask) >> 2) / c) | rr;
      if (c == 0) break;
    }
  }
  std::sort(masks.begin(), masks.end());
  return masks;
}

}  // namespace

MinBResult min_columns(const MinBQuery& q) {
  const auto t_start = std::chrono::steady_clock::now();
  auto finish = [&](MinBResult& res) -> MinBResult& {
    res.elapsed = std::chrono::steady_clock::now() - t_start;
    return res;
  };

  if (q.a.rows != q.a.cols) throw Error("state pattern must be square");
  if (q.a.rows < 1) throw Error("state dimension must be at least 1");
  if (q.max_r < 1) throw Error("max_r must be at least 1");
  if (q.max_stars_per_column && *q.max_stars_per_column < 1)
    throw Error("max_stars_per_column must be at least 1");
  const int n = q.a.rows;
  const int workers = std::max(1, q.workers);
  const std::uint64_t budget = q.candidate_budget;

  MinBResult res;
  const std::uint64_t k = count_columns(n, q.max_stars_per_column, budget);
  if (k > budget) {
    res.status = MinBStatus::kBudgetExceeded;
    return finish(res);
  }
  if (n > 62) throw Error("state dimension exceeds the 62-row column mask limit");

  const std::vector<std::uint64_t> masks = column_family(n, q.max_stars_per_column);
  const PatternTriplets base = to_triplets(q.a, n);

  auto test_candidate = [&](const std::vector<int>& idx) {
    PatternTriplets t;
    t.states = n;
    t.inputs = static_cast<int>(idx.size());
    t.entries = base.entries;
    for (std::size_t c = 0; c < idx.size(); ++c) {
      const std::uint64_t mask = masks[static_cast<std::size_t>(idx[c])];
      for (int i = 1; i <= n; ++i)
        if (mask >> (i - 1) & 1) t.entries.push_back({i, n + static_cast<int>(c) + 1});
    }
    return is_ssc(build_ccs(t), n).ssc;
  };

  std::uint64_t enumerated_total = 0;
  for (int r = 1; r <= q.max_r; ++r) {
    const std::uint64_t count_r = multiset_count(masks.size(), r, budget);
    if (count_r > budget - enumerated_total) {
      res.status = MinBStatus::kBudgetExceeded;
      res.searched_r = r - 1;
      res.candidates_tested = enumerated_total;
      return finish(res);
    }

    std::vector<int> idx(static_cast<std::size_t>(r), 0);
    std::vector<std::vector<int>> round;
    const std::size_t round_size = static_cast<std::size_t>(workers) * 128;
    bool exhausted_enum = false;
    std::uint64_t round_base = 0;
    std::vector<int> winner;

    while (!exhausted_enum && winner.empty()) {
      round.clear();
      while (round.size() < round_size && !exhausted_enum) {
        round.push_back(idx);
        if (!next_multiset(idx, static_cast<int>(masks.size()))) exhausted_enum = true;
      }

      std::int64_t hit = -1;
      if (workers == 1) {
        for (std::size_t c = 0; c < round.size(); ++c) {
          if (test_candidate(round[c])) {
            hit = static_cast<std::int64_t>(c);
            break;
          }
        }
      } else {
        const std::size_t chunk = (round.size() + static_cast<std::size_t>(workers) - 1) /
                                  static_cast<std::size_t>(workers);
        std::vector<std::int64_t> hits(static_cast<std::size_t>(workers), -1);
        std::vector<std::thread> pool;
        for (int wk = 0; wk < workers; ++wk) {
          const std::size_t lo = static_cast<std::size_t>(wk) * chunk;
          const std::size_t hi = std::min(round.size(), lo + chunk);
          if (lo >= hi) break;
          pool.emplace_back([&, wk, lo, hi] {
            for (std::size_t c = lo; c < hi; ++c) {
              if (test_candidate(round[c])) {
                hits[static_cast<std::size_t>(wk)] = static_cast<std::int64_t>(c);
                break;
              }
            }
          });
        }
        for (auto& th : pool) th.join();
        // chunks are consecutive, so the smallest hit is the enumeration-first one
        for (auto h : hits)
          if (h >= 0 && (hit < 0 || h < hit)) hit = h;
      }

      if (hit >= 0) {
        winner = round[static_cast<std::size_t>(hit)];
        enumerated_total += round_base + static_cast<std::uint64_t>(hit) + 1;
      } else {
        round_base += round.size();
      }
    }

    if (!winner.empty()) {
      if (!test_candidate(winner)) throw Error("search returned a non-controllable witness");
      CcsPattern b;
      b.rows = n;
      b.cols = r;
      b.col_ptr.assign(static_cast<std::size_t>(r) + 1, 1);
      for (std::size_t c = 0; c < winner.size(); ++c) {
        const std::uint64_t mask = masks[static_cast<std::size_t>(winner[c])];
        for (int i = 1; i <= n; ++i)
          if (mask >> (i - 1) & 1) b.row_ind.push_back(i);
        b.col_ptr[c + 1] = static_cast<int>(b.row_ind.size()) + 1;
      }
      res.status = MinBStatus::kFound;
      res.r_min = r;
      res.b = std::move(b);
      res.searched_r = r;
      res.candidates_tested = enumerated_total;
      return finish(res);
    }
    enumerated_total += round_base;
    res.searched_r = r;
  }

  res.status = MinBStatus::kNoSolutionWithinMaxR;
  res.candidates_tested = enumerated_total;
  return finish(res);
}

}  // namespace ssc
