#include "ssc/verifier.hpp"

#include <cassert>
#include <utility>

#include "ssc/errors.hpp"
#include "ssc/rng.hpp"

namespace ssc {

namespace {

int pick_from(const SparseIndexSet& set, RunOptions::PickOrder order, Rng& rng) {
  if (order == RunOptions::PickOrder::kLifo || set.size() == 1) return set.pick();
  return set.member_at(static_cast<int>(bounded_rand(rng, static_cast<std::uint64_t>(set.size()))) +
                       1);
}

}  // namespace

void remove_active(LinkedPattern& p, int w, int j, int l) {
  assert(1 <= l && l <= p.nnz);
  assert(p.col_ind[static_cast<std::size_t>(l) - 1] == j);  // l must describe an entry of column j
  const int jt = p.colmajor_pos[static_cast<std::size_t>(l) - 1];  // slot of w in column j
  const int cj = p.active_count[static_cast<std::size_t>(j) - 1];
  const int last = p.col_ptr[static_cast<std::size_t>(j) - 1] + cj - 1;  // last active slot
  assert(p.row_ind[static_cast<std::size_t>(jt) - 1] == w);
  assert(p.col_ptr[static_cast<std::size_t>(j) - 1] <= jt && jt <= last);  // w still active
  (void)w;

  const int k = p.rowmajor_pos[static_cast<std::size_t>(last) - 1];
  if (cj > 1) {
    std::swap(p.row_ind[static_cast<std::size_t>(jt) - 1],
              p.row_ind[static_cast<std::size_t>(last) - 1]);
    std::swap(p.rowmajor_pos[static_cast<std::size_t>(jt) - 1],
              p.rowmajor_pos[static_cast<std::size_t>(last) - 1]);
    p.colmajor_pos[static_cast<std::size_t>(l) - 1] = last;
    p.colmajor_pos[static_cast<std::size_t>(k) - 1] = jt;
  }
  if (cj > 0) --p.active_count[static_cast<std::size_t>(j) - 1];
}

VerifyOutcome run(LinkedPattern& p, Mode mode, const RunOptions& opts) {
  const int n = p.states;
  const int m = p.cols();
  const bool nonzero_mode = (mode == Mode::kNonzeroLambda);
  VerifyOutcome out;
  std::uint64_t ops = 0;

  MembershipFlags active(m);
  for (int i = 1; i <= n; ++i) active.set(i);
  ops += static_cast<std::uint64_t>(n);

  // Candidate columns have exactly one active row; in nonzero-lambda mode
  // only columns outside the active row set qualify, and the exhausted set
  // tracks active rows whose column has no active rows at all. Both sets are
  // filled in descending index order so the LIFO pick yields the
  // smallest-index element first.
  SparseIndexSet candidates(m);
  SparseIndexSet exhausted(n);
  if (!nonzero_mode) {
    for (int v = m; v >= 1; --v) {
      ++ops;
      if (p.active_count[static_cast<std::size_t>(v) - 1] == 1) candidates.insert(v);
    }
  } else {
    for (int v = m; v >= n + 1; --v) {
      ++ops;
      if (p.active_count[static_cast<std::size_t>(v) - 1] == 1) candidates.insert(v);
    }
    for (int v = n; v >= 1; --v) {
      ++ops;
      if (p.active_count[static_cast<std::size_t>(v) - 1] == 0) exhausted.insert(v);
    }
  }

  Rng pick_rng(opts.pick_seed);
  while (active.count() > 0) {
    ++ops;
    int picked_column = 0;
    int w = 0;
    if (!nonzero_mode || exhausted.is_empty()) {
      if (candidates.is_empty()) break;
      picked_column = pick_from(candidates, opts.pick_order, pick_rng);
      // the unique active row of the picked column sits in its first slot
      w = p.row_ind[static_cast<std::size_t>(
                        p.col_ptr[static_cast<std::size_t>(picked_column) - 1]) -
                    1];
    } else {
      w = pick_from(exhausted, opts.pick_order, pick_rng);
    }

    // drop w from the active window of every column it appears in, keeping
    // the candidate and exhausted sets in sync with the new counts
    for (int k = p.row_ptr[static_cast<std::size_t>(w) - 1];
         k < p.row_ptr[static_cast<std::size_t>(w)]; ++k) {
      ++ops;
      const int j = p.col_ind[static_cast<std::size_t>(k) - 1];
      remove_active(p, w, j, k);
      const int cj = p.active_count[static_cast<std::size_t>(j) - 1];
      if (cj == 0) {
        candidates.remove(j);
        if (nonzero_mode && active.test(j)) exhausted.insert(j);
      } else if (cj == 1) {
        if (!nonzero_mode || !active.test(j)) candidates.insert(j);
      }
    }
    if (nonzero_mode) {
      // w leaves the active set, so its own column becomes eligible (or
      // stops being exhausted) only now
      const int cw = p.active_count[static_cast<std::size_t>(w) - 1];
      if (cw == 1)
        candidates.insert(w);
      else if (cw == 0)
        exhausted.remove(w);
    }
    active.reset(w);
    ++out.removals;

    if (opts.validate_each_removal) {
      const auto violations = validate_links(p, active);
      if (!violations.empty()) {
        const auto& v = violations.front();
        throw InvariantViolation(std::string("linked state inconsistent after removing row ") +
                                 std::to_string(w) + ": " + to_string(v.rule) + " at " +
                                 std::to_string(v.position) + " (" + v.detail + "); " +
                                 std::to_string(violations.size()) + " violation(s)");
      }
    }
    if (opts.observer) {
      IterationSnapshot snap;
      snap.iteration = out.removals;
      snap.picked_column = picked_column;
      snap.removed_row = w;
      snap.candidate_columns = candidates.members();
      snap.exhausted_rows = exhausted.members();
      snap.active_rows = active.sorted_members();
      opts.observer(p, snap);
    }
  }

  out.witness.reserve(static_cast<std::size_t>(active.count()));
  for (int i = 1; i <= n; ++i)
    if (active.test(i)) out.witness.push_back(i);
  ops += static_cast<std::uint64_t>(n);
  out.is_empty_witness = out.witness.empty();
  out.ops = ops;
  return out;
}

SscReport is_ssc(const CcsPattern& x, int states, const RunOptions& opts) {
  SscReport rep;
  {
    LinkedPattern p = build_linked(x, states);
    rep.mode0 = run(p, Mode::kLambdaZero, opts);
  }
  {
    LinkedPattern p = build_linked(x, states);
    rep.mode1 = run(p, Mode::kNonzeroLambda, opts);
  }
  rep.ssc_lambda0 = rep.mode0.is_empty_witness;
  rep.ssc_nonzero = rep.mode1.is_empty_witness;
  rep.ssc = rep.ssc_lambda0 && rep.ssc_nonzero;
  return rep;
}

}  // namespace ssc
