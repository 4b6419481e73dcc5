#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "ssc/pattern.hpp"
#include "ssc/rng.hpp"
#include "ssc/verifier.hpp"

// Slow, independent reference implementations used to cross-check the
// linear-time verifier on small instances.
namespace ssc::oracle {

// Dense {0,*} grid.
struct DensePattern {
  int states = 0;
  int inputs = 0;
  std::vector<std::uint8_t> grid;  // row-major, states x (states+inputs)

  int cols() const { return states + inputs; }
  bool star(int i, int j) const {
    return grid[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols()) +
                static_cast<std::size_t>(j - 1)] != 0;
  }
  void set_star(int i, int j) {
    grid[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols()) +
         static_cast<std::size_t>(j - 1)] = 1;
  }

  static DensePattern from_ccs(const CcsPattern& x, int states);
};

// Rows with a *-entry in column j, ascending.
std::vector<int> nzr(const DensePattern& d, int j);

// Columns with a *-entry in some row of `rows`, ascending.
std::vector<int> nzc(const DensePattern& d, const std::vector<int>& rows);

// Exhaustive subset conditions, cost 2^states * cols. The zero-eigenvalue
// condition asks every nonempty row subset V for a column meeting V in
// exactly one row; the nonzero-eigenvalue condition restricts to subsets V
// covered by their own columns and to candidate columns outside V.
// Throws ExhaustionBoundExceeded when states > exhaustion_bound.
bool lambda_zero_condition(const DensePattern& d, int exhaustion_bound = 20);
bool nonzero_lambda_condition(const DensePattern& d, int exhaustion_bound = 20);

// Literal restatement of the high-level peeling method with the candidate
// set recomputed from scratch each iteration and smallest-index picks.
// Returns the final witness set. O(states^2 * cols).
std::vector<int> naive_witness(const DensePattern& d, Mode mode);

// A numeric realization whose zero/nonzero structure matches the pattern;
// nonzero entries are uniform on [-2,-0.1] U [0.1,2].
struct NumericInstance {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
};

NumericInstance sample_instance(const DensePattern& d, Rng& rng);

// One-sided numeric check: samples `trials` realizations and tests that
// (lambda*I - A, B) has full row rank at lambda = 0 and at every eigenvalue
// of the sampled A (rank via singular values, relative tolerance 1e-8).
// A pattern the verifier accepts must pass; passing certifies nothing.
bool hautus_spotcheck(const DensePattern& d, int trials, std::uint64_t seed);

}  // namespace ssc::oracle
