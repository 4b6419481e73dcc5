#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ssc/linked_pattern.hpp"

namespace ssc {

// Which half of the controllability test to run: the eigenvalue-zero
// condition, or the condition covering every nonzero eigenvalue.
enum class Mode { kLambdaZero = 0, kNonzeroLambda = 1 };

struct VerifyOutcome {
  std::vector<int> witness;      // remaining rows, ascending; empty = pass
  bool is_empty_witness = false;
  std::uint64_t ops = 0;         // executed basic steps
  int removals = 0;              // completed row removals
};

// End-of-iteration snapshot handed to RunOptions::observer.
struct IterationSnapshot {
  int iteration = 0;      // 1-based
  int picked_column = 0;  // v, or 0 when the row came from the exhausted set
  int removed_row = 0;    // w
  std::vector<int> candidate_columns;  // packed order
  std::vector<int> exhausted_rows;     // packed order (nonzero-lambda mode only)
  std::vector<int> active_rows;        // ascending
};

struct RunOptions {
  enum class PickOrder { kLifo, kRandom };
  PickOrder pick_order = PickOrder::kLifo;
  std::uint64_t pick_seed = 0;
  // Re-validate the linked representation after every completed row removal;
  // throws InvariantViolation on the first inconsistency. Slow.
  bool validate_each_removal = false;
  std::function<void(const LinkedPattern&, const IterationSnapshot&)> observer;
};

// O(1) removal of row w from column j's active window. l is the row-major
// slot of the (w, j) entry; w must currently be active in column j.
// Violated preconditions are programming errors (asserted in debug builds).
void remove_active(LinkedPattern& p, int w, int j, int l);

// The main loop. Consumes p: its arrays are permuted in place and encode the
// final active state afterwards. O(states + inputs + nnz).
VerifyOutcome run(LinkedPattern& p, Mode mode, const RunOptions& opts = {});

struct SscReport {
  bool ssc = false;
  bool ssc_lambda0 = false;
  bool ssc_nonzero = false;
  VerifyOutcome mode0;
  VerifyOutcome mode1;
};

// Two fresh runs, one per mode; the pair is controllable for every numeric
// realization iff both witnesses are empty.
SscReport is_ssc(const CcsPattern& x, int states, const RunOptions& opts = {});

}  // namespace ssc
