#include "ssc/oracle.hpp"

#include <bit>
#include <complex>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "ssc/errors.hpp"

namespace ssc::oracle {

DensePattern DensePattern::from_ccs(const CcsPattern& x, int states) {
  if (x.rows != states) throw Error("state count does not match the pattern's row count");
  if (x.cols < states) throw Error("pattern needs at least one column per state");
  DensePattern d;
  d.states = states;
  d.inputs = x.cols - states;
  d.grid.assign(static_cast<std::size_t>(states) * static_cast<std::size_t>(x.cols), 0);
  for (int j = 1; j <= x.cols; ++j)
    for (int k = x.col_ptr[static_cast<std::size_t>(j) - 1];
         k < x.col_ptr[static_cast<std::size_t>(j)]; ++k)
      d.set_star(x.row_ind[static_cast<std::size_t>(k) - 1], j);
  return d;
}

std::vector<int> nzr(const DensePattern& d, int j) {
  if (j < 1 || j > d.cols()) throw IndexOutOfRange("column index", j, 1, d.cols());
  std::vector<int> rows;
  for (int i = 1; i <= d.states; ++i)
    if (d.star(i, j)) rows.push_back(i);
  return rows;
}

std::vector<int> nzc(const DensePattern& d, const std::vector<int>& rows) {
  for (int i : rows)
    if (i < 1 || i > d.states) throw IndexOutOfRange("row index", i, 1, d.states);
  std::vector<int> cols;
  for (int j = 1; j <= d.cols(); ++j) {
    for (int i : rows) {
      if (d.star(i, j)) {
        cols.push_back(j);
        break;
      }
    }
  }
  return cols;
}

namespace {

std::vector<std::uint64_t> column_masks(const DensePattern& d) {
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(d.cols()) + 1, 0);
  for (int j = 1; j <= d.cols(); ++j)
    for (int i = 1; i <= d.states; ++i)
      if (d.star(i, j)) masks[static_cast<std::size_t>(j)] |= 1ULL << (i - 1);
  return masks;
}

void check_bound(const DensePattern& d, int bound) {
  if (d.states > bound)
    throw ExhaustionBoundExceeded("subset enumeration over " + std::to_string(d.states) +
                                  " rows exceeds the bound " + std::to_string(bound));
  if (d.states > 62) throw ExhaustionBoundExceeded("subset enumeration limited to 62 rows");
}

}  // namespace

bool lambda_zero_condition(const DensePattern& d, int exhaustion_bound) {
  check_bound(d, exhaustion_bound);
  const int n = d.states;
  const int m = d.cols();
  const auto masks = column_masks(d);
  const std::uint64_t all = (n == 0) ? 0 : ((n == 64) ? ~0ULL : (1ULL << n) - 1);
  for (std::uint64_t subset = 1; subset <= all && all != 0; ++subset) {
    bool found = false;
    for (int v = 1; v <= m && !found; ++v)
      found = std::popcount(masks[static_cast<std::size_t>(v)] & subset) == 1;
    if (!found) return false;
  }
  return true;
}

bool nonzero_lambda_condition(const DensePattern& d, int exhaustion_bound) {
  check_bound(d, exhaustion_bound);
  const int n = d.states;
  const int m = d.cols();
  const auto masks = column_masks(d);
  const std::uint64_t all = (n == 0) ? 0 : ((n == 64) ? ~0ULL : (1ULL << n) - 1);
  for (std::uint64_t subset = 1; subset <= all && all != 0; ++subset) {
    // only subsets covered by their own columns constrain the pattern
    bool covered = true;
    for (int i = 1; i <= n && covered; ++i)
      if (subset >> (i - 1) & 1)
        covered = (masks[static_cast<std::size_t>(i)] & subset) != 0;
    if (!covered) continue;
    bool found = false;
    for (int v = 1; v <= m && !found; ++v) {
      if (v <= n && (subset >> (v - 1) & 1)) continue;  // candidate must lie outside the subset
      found = std::popcount(masks[static_cast<std::size_t>(v)] & subset) == 1;
    }
    if (!found) return false;
  }
  return true;
}

std::vector<int> naive_witness(const DensePattern& d, Mode mode) {
  const int n = d.states;
  const int m = d.cols();
  const bool nonzero_mode = (mode == Mode::kNonzeroLambda);
  std::vector<char> in_set(static_cast<std::size_t>(n) + 1, 1);
  int remaining = n;

  while (remaining > 0) {
    // candidate columns meeting the remaining rows in exactly one position
    std::vector<int> candidates;
    for (int v = 1; v <= m; ++v) {
      if (nonzero_mode && v <= n && in_set[static_cast<std::size_t>(v)]) continue;
      int cnt = 0;
      for (int i = 1; i <= n && cnt < 2; ++i)
        cnt += (in_set[static_cast<std::size_t>(i)] && d.star(i, v)) ? 1 : 0;
      if (cnt == 1) candidates.push_back(v);
    }

    int uncovered = 0;
    if (nonzero_mode) {
      for (int i = 1; i <= n && uncovered == 0; ++i) {
        if (!in_set[static_cast<std::size_t>(i)]) continue;
        bool has = false;
        for (int t = 1; t <= n && !has; ++t)
          has = in_set[static_cast<std::size_t>(t)] && d.star(t, i);
        if (!has) uncovered = i;
      }
    }

    int w = 0;
    if (!nonzero_mode || uncovered == 0) {
      if (candidates.empty()) break;
      const int v = candidates.front();
      for (int i = 1; i <= n && w == 0; ++i)
        if (in_set[static_cast<std::size_t>(i)] && d.star(i, v)) w = i;
    } else {
      w = uncovered;
    }
    in_set[static_cast<std::size_t>(w)] = 0;
    --remaining;
  }

  std::vector<int> witness;
  for (int i = 1; i <= n; ++i)
    if (in_set[static_cast<std::size_t>(i)]) witness.push_back(i);
  return witness;
}

NumericInstance sample_instance(const DensePattern& d, Rng& rng) {
  NumericInstance inst;
  inst.A = Eigen::MatrixXd::Zero(d.states, d.states);
  inst.B = Eigen::MatrixXd::Zero(d.states, d.inputs);
  for (int i = 1; i <= d.states; ++i) {
    for (int j = 1; j <= d.cols(); ++j) {
      if (!d.star(i, j)) continue;
      const double magnitude = 0.1 + 1.9 * unit_real(rng);
      const double value = (rng() & 1) ? magnitude : -magnitude;
      if (j <= d.states)
        inst.A(i - 1, j - 1) = value;
      else
        inst.B(i - 1, j - d.states - 1) = value;
    }
  }
  return inst;
}

namespace {

bool full_row_rank(const Eigen::MatrixXcd& pencil, int rows) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(pencil);
  const auto& sv = svd.singularValues();
  if (sv.size() < rows) return false;
  const double largest = sv(0);
  if (!(largest > 0.0)) return false;
  return sv(rows - 1) > 1e-8 * largest;
}

}  // namespace

bool hautus_spotcheck(const DensePattern& d, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error("trials must be positive");
  const int n = d.states;
  const int r = d.inputs;
  if (n == 0) return true;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const NumericInstance inst = sample_instance(d, rng);
    std::vector<std::complex<double>> lambdas;
    lambdas.emplace_back(0.0, 0.0);
    // rank deficiency can only occur at eigenvalues of A
    Eigen::EigenSolver<Eigen::MatrixXd> es(inst.A, /*computeEigenvectors=*/false);
    if (es.info() == Eigen::Success)
      for (int i = 0; i < n; ++i) lambdas.push_back(es.eigenvalues()(i));
    for (const auto& lambda : lambdas) {
      Eigen::MatrixXcd pencil(n, n + r);
      pencil.leftCols(n) =
          lambda * Eigen::MatrixXcd::Identity(n, n) - inst.A.cast<std::complex<double>>();
      if (r > 0) pencil.rightCols(r) = inst.B.cast<std::complex<double>>();
      if (!full_row_rank(pencil, n)) return false;
    }
  }
  return true;
}

}  // namespace ssc::oracle
