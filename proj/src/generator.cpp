#include "ssc/generator.hpp"

#include <algorithm>
#include <numeric>

#include "ssc/errors.hpp"
#include "ssc/rng.hpp"
#include "ssc/verifier.hpp"

namespace ssc {

namespace {

// Column-major cell numbering over an n x m grid: id = (col-1)*n + (row-1).
Entry cell_to_entry(std::uint64_t id, int n) {
  return {static_cast<int>(id % static_cast<std::uint64_t>(n)) + 1,
          static_cast<int>(id / static_cast<std::uint64_t>(n)) + 1};
}

PatternTriplets draw_uniform(Rng& rng, const GenSpec& spec) {
  PatternTriplets t;
  t.states = spec.states;
  t.inputs = spec.inputs;
  const std::uint64_t grid = static_cast<std::uint64_t>(spec.states) *
                             static_cast<std::uint64_t>(spec.states + spec.inputs);
  const auto ids = sample_distinct(rng, grid, static_cast<std::uint64_t>(spec.target_nnz));
  t.entries.reserve(ids.size());
  for (const std::uint64_t id : ids) t.entries.push_back(cell_to_entry(id, spec.states));
  return t;
}

// Plants a removal certificate: a random peel order w_1..w_n and distinct
// certificate columns v_1..v_n such that column v_t meets the not-yet-peeled
// rows exactly in w_t. Every remaining entry is scattered uniformly over
// cells that cannot break the certificate: certificate columns may only take
// rows peeled earlier, free columns may take any row. For the full
// requirement the certificate columns are additionally kept outside the
// still-active row set (earlier-peeled state columns or input columns).
PatternTriplets draw_certified(Rng& rng, const GenSpec& spec, bool want_full) {
  const int n = spec.states;
  const int r = spec.inputs;
  const int m = n + r;
  const std::int64_t nu = spec.target_nnz;
  if (nu < n)
    throw GenerationFailed("requirement needs at least one entry per state (target_nnz < states)");
  if (want_full && r == 0 && n > 0)
    throw GenerationFailed("the full requirement needs at least one input column");

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  deterministic_shuffle(order, rng);

  std::vector<int> cert(static_cast<std::size_t>(n), 0);
  if (!want_full) {
    std::vector<int> pool(static_cast<std::size_t>(m));
    std::iota(pool.begin(), pool.end(), 1);
    deterministic_shuffle(pool, rng);
    std::copy_n(pool.begin(), n, cert.begin());
  } else {
    std::vector<int> pool;
    pool.reserve(static_cast<std::size_t>(r) + static_cast<std::size_t>(n));
    for (int q = 1; q <= r; ++q) pool.push_back(n + q);
    for (int t = 1; t <= n; ++t) {
      const std::size_t idx =
          static_cast<std::size_t>(bounded_rand(rng, static_cast<std::uint64_t>(pool.size())));
      cert[static_cast<std::size_t>(t) - 1] = pool[idx];
      pool[idx] = pool.back();
      pool.pop_back();
      pool.push_back(order[static_cast<std::size_t>(t) - 1]);  // usable from step t+1 on
    }
  }

  std::vector<int> cert_step(static_cast<std::size_t>(m) + 1, 0);  // column -> t, 0 = free
  for (int t = 1; t <= n; ++t) cert_step[static_cast<std::size_t>(cert[t - 1])] = t;

  // capacity of certificate column v_t is t-1 (rows peeled before step t);
  // free columns can hold all n rows
  std::vector<std::uint64_t> cum(static_cast<std::size_t>(m) + 1, 0);
  for (int v = 1; v <= m; ++v) {
    const int t = cert_step[static_cast<std::size_t>(v)];
    const std::uint64_t cap = (t > 0) ? static_cast<std::uint64_t>(t - 1)
                                      : static_cast<std::uint64_t>(n);
    cum[static_cast<std::size_t>(v)] = cum[static_cast<std::size_t>(v) - 1] + cap;
  }
  const std::uint64_t extra = static_cast<std::uint64_t>(nu - n);
  if (extra > cum[static_cast<std::size_t>(m)])
    throw GenerationFailed("target_nnz too dense for the certificate construction (max " +
                           std::to_string(cum[static_cast<std::size_t>(m)] +
                                          static_cast<std::uint64_t>(n)) +
                           " entries)");

  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(nu));
  for (int t = 1; t <= n; ++t) entries.push_back({order[t - 1], cert[t - 1]});
  for (const std::uint64_t rank : sample_distinct(rng, cum[static_cast<std::size_t>(m)], extra)) {
    const auto it = std::upper_bound(cum.begin(), cum.end(), rank);
    const int v = static_cast<int>(it - cum.begin());
    const std::uint64_t off = rank - cum[static_cast<std::size_t>(v) - 1];
    const int t = cert_step[static_cast<std::size_t>(v)];
    const int row = (t > 0) ? order[static_cast<std::size_t>(off)] : static_cast<int>(off) + 1;
    entries.push_back({row, v});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.col != b.col ? a.col < b.col : a.row < b.row; });

  PatternTriplets t;
  t.states = n;
  t.inputs = r;
  t.entries = std::move(entries);
  return t;
}

bool satisfies(const CcsPattern& x, int states, Requirement require) {
  switch (require) {
    case Requirement::kNone: return true;
    case Requirement::kSscLambda0: {
      LinkedPattern p = build_linked(x, states);
      return run(p, Mode::kLambdaZero).is_empty_witness;
    }
    case Requirement::kSscFull: return is_ssc(x, states).ssc;
  }
  return false;
}

}  // namespace

GenResult generate(const GenSpec& spec) {
  const int n = spec.states;
  const int r = spec.inputs;
  if (n < 0 || r < 0) throw Error("negative dimensions");
  const std::int64_t grid = static_cast<std::int64_t>(n) * (n + r);
  if (spec.target_nnz < 0 || spec.target_nnz > grid)
    throw Error("target_nnz outside [0;" + std::to_string(grid) + "]");
  if (spec.max_attempts < 1) throw Error("max_attempts must be at least 1");

  const bool needs_certificate =
      spec.require != Requirement::kNone && spec.strategy == GenSpec::Strategy::kSeeded;
  Rng rng(spec.seed);
  for (int attempt = 1; attempt <= spec.max_attempts; ++attempt) {
    PatternTriplets t =
        needs_certificate
            ? draw_certified(rng, spec, spec.require == Requirement::kSscFull)
            : draw_uniform(rng, spec);
    CcsPattern x = build_ccs(t);
    if (satisfies(x, n, spec.require)) {
      GenResult res;
      res.triplets = std::move(t);
      res.pattern = std::move(x);
      res.attempts = attempt;
      return res;
    }
  }
  throw GenerationFailed("no pattern met the requirement within " +
                         std::to_string(spec.max_attempts) + " attempt(s)");
}

}  // namespace ssc
