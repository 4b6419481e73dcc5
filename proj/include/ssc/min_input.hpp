#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "ssc/pattern.hpp"

namespace ssc {

// Exhaustive desk-scale search for an input pattern with the fewest columns
// that makes the given state pattern controllable in the strong structural
// sense. The general problem is NP-hard; the search is guarded by an
// enumeration budget.
struct MinBQuery {
  CcsPattern a;    // square state pattern
  int max_r = 3;   // largest column count to try
  std::optional<int> max_stars_per_column;  // restrict the column family
  int workers = 1;
  std::uint64_t candidate_budget = 5'000'000;  // total enumeration guard
};

enum class MinBStatus { kFound, kNoSolutionWithinMaxR, kBudgetExceeded };

struct MinBResult {
  MinBStatus status = MinBStatus::kNoSolutionWithinMaxR;
  int r_min = 0;      // valid when kFound
  CcsPattern b;       // witness, states x r_min, valid when kFound
  int searched_r = 0;  // highest fully searched column count
  std::uint64_t candidates_tested = 0;  // enumerated up to and including the winner
  std::chrono::nanoseconds elapsed{0};
};

// Enumerates multisets of nonzero column patterns (column order never matters
// for the verdict) in increasing column count, columns ordered by their
// numeric bit mask; the first success is reported, independent of the worker
// count. Every returned witness is re-verified before it is returned.
MinBResult min_columns(const MinBQuery& q);

}  // namespace ssc
