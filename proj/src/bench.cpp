#include "ssc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

#include "ssc/errors.hpp"
#include "ssc/rng.hpp"
#include "ssc/verifier.hpp"

namespace ssc {

namespace {

std::uint64_t median_u64(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  if (v.size() % 2 == 1) return v[mid];
  return (v[mid - 1] + v[mid]) / 2;
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::vector<BenchCell>& cells, const BenchOptions& opt) {
  if (opt.repeats < 1) throw Error("repeats must be at least 1");

  struct Slot {
    const BenchCell* cell;
    CcsPattern pattern;
    Mode mode;
    std::vector<std::uint64_t> times;
    VerifyOutcome outcome;
  };
  std::vector<Slot> slots;
  slots.reserve(cells.size() * 2);
  for (const BenchCell& cell : cells) {
    GenSpec gs;
    gs.states = cell.states;
    gs.inputs = cell.inputs;
    gs.target_nnz = cell.nnz;
    gs.seed = cell.seed;
    gs.require = opt.require;
    gs.max_attempts = opt.max_attempts;
    GenResult gen = generate(gs);
    for (const Mode mode : {Mode::kLambdaZero, Mode::kNonzeroLambda}) {
      Slot slot;
      slot.cell = &cell;
      slot.pattern = gen.pattern;
      slot.mode = mode;
      slot.times.reserve(static_cast<std::size_t>(opt.repeats));
      slots.push_back(std::move(slot));
    }
  }

  // One discarded warm-up per slot, then round-robin timed repeats in a
  // freshly shuffled order each round: slow-downs from outside the process
  // (scheduler, frequency drift) then spread over all cells instead of
  // biasing whichever cell they happen to coincide with.
  for (Slot& slot : slots) {
    LinkedPattern warmup = build_linked(slot.pattern, slot.cell->states);
    (void)run(warmup, slot.mode);
  }
  std::vector<std::size_t> order(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) order[i] = i;
  Rng order_rng(0x5eedULL);
  for (int rep = 0; rep < opt.repeats; ++rep) {
    deterministic_shuffle(order, order_rng);
    for (const std::size_t si : order) {
      Slot& slot = slots[si];
      LinkedPattern p = build_linked(slot.pattern, slot.cell->states);
      const auto t0 = std::chrono::steady_clock::now();
      slot.outcome = run(p, slot.mode);
      const auto t1 = std::chrono::steady_clock::now();
      slot.times.push_back(static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
    }
  }

  std::vector<BenchRecord> records;
  records.reserve(slots.size());
  for (Slot& slot : slots) {
    BenchRecord rec;
    rec.states = slot.cell->states;
    rec.inputs = slot.cell->inputs;
    rec.nnz = slot.cell->nnz;
    rec.seed = slot.cell->seed;
    rec.mode = (slot.mode == Mode::kLambdaZero) ? 0 : 1;
    rec.time_ns = median_u64(slot.times);
    rec.ops = slot.outcome.ops;
    rec.removals = slot.outcome.removals;
    rec.witness_empty = slot.outcome.is_empty_witness;
    records.push_back(rec);
  }
  return records;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& rows) {
  out << "n,r,nu,seed,L,time_ns,ops,removals,verdict\n";
  for (const BenchRecord& rec : rows) {
    out << rec.states << ',' << rec.inputs << ',' << rec.nnz << ',' << rec.seed << ','
        << rec.mode << ',' << rec.time_ns << ',' << rec.ops << ',' << rec.removals << ','
        << (rec.witness_empty ? "ssc-part" : "witness") << '\n';
  }
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw Error("fit needs at least two points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LinearFit fit;
  fit.slope = (sxx == 0.0) ? 0.0 : sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double pred = fit.intercept + fit.slope * x[i];
    ss_res += (y[i] - pred) * (y[i] - pred);
    ss_tot += (y[i] - my) * (y[i] - my);
  }
  fit.r_squared = (ss_tot == 0.0) ? 1.0 : 1.0 - ss_res / ss_tot;
  return fit;
}

double median(std::vector<double> v) {
  if (v.empty()) throw Error("median of an empty sample");
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  if (v.size() % 2 == 1) return v[mid];
  return 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace ssc
