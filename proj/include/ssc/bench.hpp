#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ssc/generator.hpp"

namespace ssc {

struct BenchRecord {
  int states = 0;
  int inputs = 0;
  std::int64_t nnz = 0;
  std::uint64_t seed = 0;
  int mode = 0;  // L
  std::uint64_t time_ns = 0;  // median over the timed repeats
  std::uint64_t ops = 0;
  int removals = 0;
  bool witness_empty = false;
};

struct BenchCell {
  int states = 0;
  int inputs = 0;
  std::int64_t nnz = 0;
  std::uint64_t seed = 0;
};

struct BenchOptions {
  int repeats = 11;  // timed repeats per (cell, mode); median reported
  Requirement require = Requirement::kSscLambda0;
  int max_attempts = 16;
};

// Generates each cell's pattern once, then times the verification loop alone
// (fresh linked build per repeat, one discarded warm-up). Generation and the
// linked build stay outside the timed region.
std::vector<BenchRecord> run_bench(const std::vector<BenchCell>& cells,
                                   const BenchOptions& opt = {});

// Header: n,r,nu,seed,L,time_ns,ops,removals,verdict
// verdict is `ssc-part` for an empty witness and `witness` otherwise.
void write_csv(std::ostream& out, const std::vector<BenchRecord>& rows);

struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
  double r_squared = 0.0;
};

// Least squares y = intercept + slope * x. R^2 of a constant-y fit is 1.
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Middle element (average of the middle two for even sizes).
double median(std::vector<double> v);

}  // namespace ssc
