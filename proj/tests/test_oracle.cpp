#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ssc/errors.hpp"
#include "ssc/oracle.hpp"
#include "support.hpp"

using namespace ssc;
using oracle::DensePattern;
using test::demo6_triplets;
using test::pattern_from_mask;
using test::random_pattern;

namespace {

DensePattern demo6_dense() {
  return DensePattern::from_ccs(build_ccs(demo6_triplets()), 6);
}

DensePattern dense_of(const PatternTriplets& t) {
  return DensePattern::from_ccs(build_ccs(t), t.states);
}

}  // namespace

TEST_CASE("row and column scans") {
  const DensePattern d = demo6_dense();
  CHECK(oracle::nzr(d, 1) == std::vector<int>{3, 5});
  CHECK(oracle::nzr(d, 7) == std::vector<int>{2, 3});
  CHECK(oracle::nzr(d, 3).empty());
  CHECK(oracle::nzc(d, {}).empty());
  CHECK(oracle::nzc(d, {2}) == std::vector<int>{2, 7});
  CHECK_THROWS_AS(oracle::nzr(d, 9), IndexOutOfRange);
  CHECK_THROWS_AS(oracle::nzc(d, {7}), IndexOutOfRange);
}

TEST_CASE("subset conditions on the demo pair and tiny cases") {
  CHECK(oracle::lambda_zero_condition(demo6_dense()));
  CHECK(oracle::nonzero_lambda_condition(demo6_dense()));

  // single all-zero state
  const DensePattern zero = dense_of(pattern_from_mask(1, 0, 0));
  CHECK_FALSE(oracle::lambda_zero_condition(zero));

  // single self-loop without input
  const DensePattern loop = dense_of(pattern_from_mask(1, 0, 1));
  CHECK(oracle::lambda_zero_condition(loop));
  CHECK_FALSE(oracle::nonzero_lambda_condition(loop));
}

TEST_CASE("exhaustion bound is enforced") {
  PatternTriplets t;
  t.states = 21;
  t.inputs = 0;
  const DensePattern d = dense_of(t);
  CHECK_THROWS_AS(oracle::lambda_zero_condition(d), ExhaustionBoundExceeded);
  CHECK_THROWS_AS(oracle::nonzero_lambda_condition(d, 20), ExhaustionBoundExceeded);
  CHECK_NOTHROW(oracle::lambda_zero_condition(d, 21));
}

TEST_CASE("the naive method agrees with the demo expectations") {
  const DensePattern d = demo6_dense();
  CHECK(oracle::naive_witness(d, Mode::kLambdaZero).empty());
  CHECK(oracle::naive_witness(d, Mode::kNonzeroLambda).empty());

  const DensePattern empty2 = dense_of(pattern_from_mask(2, 0, 0));
  CHECK_FALSE(oracle::naive_witness(empty2, Mode::kLambdaZero).empty());
}

TEST_CASE("naive method matches the subset conditions on small random patterns") {
  Rng rng(11);
  for (int iter = 0; iter < 500; ++iter) {
    const int n = 1 + static_cast<int>(bounded_rand(rng, 4));
    const int r = static_cast<int>(bounded_rand(rng, 3));
    const int nnz = static_cast<int>(bounded_rand(rng, static_cast<std::uint64_t>(n * (n + r)) + 1));
    const DensePattern d = dense_of(random_pattern(rng, n, r, nnz));
    CHECK(oracle::naive_witness(d, Mode::kLambdaZero).empty() == oracle::lambda_zero_condition(d));
    CHECK(oracle::naive_witness(d, Mode::kNonzeroLambda).empty() ==
          oracle::nonzero_lambda_condition(d));
  }
}

TEST_CASE("sampled instances respect the pattern") {
  const DensePattern d = demo6_dense();
  Rng rng(5);
  const oracle::NumericInstance inst = oracle::sample_instance(d, rng);
  for (int i = 1; i <= 6; ++i) {
    for (int j = 1; j <= 8; ++j) {
      const double v = (j <= 6) ? inst.A(i - 1, j - 1) : inst.B(i - 1, j - 7);
      if (d.star(i, j)) {
        CHECK(std::abs(v) >= 0.1);
        CHECK(std::abs(v) <= 2.0);
      } else {
        CHECK(v == 0.0);
      }
    }
  }
}

TEST_CASE("numeric rank spot-check") {
  CHECK(oracle::hautus_spotcheck(demo6_dense(), 100, 7));
  CHECK_FALSE(oracle::hautus_spotcheck(dense_of(pattern_from_mask(1, 0, 0)), 1, 7));
  // single state, zero dynamics, one input: full rank for every lambda
  CHECK(oracle::hautus_spotcheck(dense_of(pattern_from_mask(1, 1, 0b10)), 50, 7));
  CHECK_THROWS_AS(oracle::hautus_spotcheck(demo6_dense(), 0, 7), Error);
}
