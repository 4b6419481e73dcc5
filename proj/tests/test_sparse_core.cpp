#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ssc/errors.hpp"
#include "ssc/linked_pattern.hpp"
#include "ssc/pattern.hpp"
#include "support.hpp"

using namespace ssc;
using test::demo6_triplets;
using test::random_pattern;
using test::sorted_entries;

TEST_CASE("build_ccs on the six-state demo pair") {
  const CcsPattern x = build_ccs(demo6_triplets());
  CHECK(x.rows == 6);
  CHECK(x.cols == 8);
  CHECK(x.nnz() == 9);
  CHECK(x.row_ind == std::vector<int>{3, 5, 2, 1, 6, 4, 2, 3, 6});
  CHECK(x.col_ptr == std::vector<int>{1, 3, 4, 4, 6, 6, 7, 9, 10});
  CHECK(x.row_ind[2] == 2);  // third slot holds the lone row of column 2
  CHECK(x.has_entry(3, 1));
  CHECK_FALSE(x.has_entry(1, 1));
}

TEST_CASE("build_ccs keeps first-appearance order within a column") {
  PatternTriplets t;
  t.states = 6;
  t.inputs = 0;
  t.entries = {{5, 1}, {3, 1}};
  const CcsPattern x = build_ccs(t);
  CHECK(x.row_ind == std::vector<int>{5, 3});
}

TEST_CASE("build_ccs boundary: empty pattern") {
  PatternTriplets t;
  t.states = 1;
  t.inputs = 0;
  const CcsPattern x = build_ccs(t);
  CHECK(x.row_ind.empty());
  CHECK(x.col_ptr == std::vector<int>{1, 1});
}

TEST_CASE("build_ccs rejects duplicates and bad indices") {
  PatternTriplets t;
  t.states = 2;
  t.inputs = 1;
  t.entries = {{1, 2}, {1, 2}};
  CHECK_THROWS_AS(build_ccs(t), DuplicateEntry);
  try {
    build_ccs(t);
  } catch (const DuplicateEntry& e) {
    CHECK(e.row == 1);
    CHECK(e.col == 2);
  }
  t.entries = {{3, 1}};
  CHECK_THROWS_AS(build_ccs(t), IndexOutOfRange);
  t.entries = {{1, 4}};
  CHECK_THROWS_AS(build_ccs(t), IndexOutOfRange);
}

TEST_CASE("transpose of the six-state demo pair") {
  const CcsPattern x = build_ccs(demo6_triplets());
  const CcsPattern z = transpose(x);
  CHECK(z.rows == 8);
  CHECK(z.cols == 6);
  CHECK(z.row_ind == std::vector<int>{4, 2, 7, 1, 7, 6, 1, 4, 8});
  CHECK(z.col_ptr == std::vector<int>{1, 2, 4, 6, 7, 8, 10});
}

TEST_CASE("transpose of a 1x1 singleton is itself") {
  PatternTriplets t;
  t.states = 1;
  t.inputs = 0;
  t.entries = {{1, 1}};
  const CcsPattern x = build_ccs(t);
  CHECK(transpose(x) == x);
}

TEST_CASE("transpose emits each output column in increasing index order") {
  Rng rng(808080);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 1 + static_cast<int>(bounded_rand(rng, 10));
    const int r = static_cast<int>(bounded_rand(rng, 4));
    const int nnz = static_cast<int>(bounded_rand(rng, static_cast<std::uint64_t>(n * (n + r)) + 1));
    PatternTriplets t = random_pattern(rng, n, r, nnz);
    deterministic_shuffle(t.entries, rng);
    const CcsPattern z = transpose(build_ccs(t));
    bool sorted_within = true;
    for (int j = 1; j <= z.cols; ++j)
      for (int k = z.col_ptr[j - 1] + 1; k < z.col_ptr[j]; ++k)
        sorted_within = sorted_within && (z.row_ind[k - 2] < z.row_ind[k - 1]);
    CHECK(sorted_within);
  }
}

TEST_CASE("double transpose restores the position set") {
  Rng rng(2024);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + static_cast<int>(bounded_rand(rng, 8));
    const int r = static_cast<int>(bounded_rand(rng, 4));
    const int nnz = static_cast<int>(bounded_rand(rng, static_cast<std::uint64_t>(n * (n + r)) + 1));
    PatternTriplets t = random_pattern(rng, n, r, nnz);
    deterministic_shuffle(t.entries, rng);  // non-canonical within-column order too
    const CcsPattern x = build_ccs(t);
    const CcsPattern back = transpose(transpose(x));
    CHECK(back.nnz() == x.nnz());
    CHECK(sorted_entries(back) == sorted_entries(x));
  }
}

TEST_CASE("triplet expansion reproduces the input position set") {
  Rng rng(77);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 1 + static_cast<int>(bounded_rand(rng, 6));
    const int r = static_cast<int>(bounded_rand(rng, 3));
    const int nnz = static_cast<int>(bounded_rand(rng, static_cast<std::uint64_t>(n * (n + r)) + 1));
    const PatternTriplets t = random_pattern(rng, n, r, nnz);
    const CcsPattern x = build_ccs(t);
    const PatternTriplets back = to_triplets(x, n);
    CHECK(back == t);  // column-major input, so order survives as well
  }
}

TEST_CASE("build_linked on the six-state demo pair") {
  const CcsPattern x = build_ccs(demo6_triplets());
  const LinkedPattern p = build_linked(x, 6);
  CHECK(p.states == 6);
  CHECK(p.inputs == 2);
  CHECK(p.nnz == 9);
  CHECK(p.col_ind == std::vector<int>{4, 2, 7, 1, 7, 6, 1, 4, 8});
  CHECK(p.row_ptr == std::vector<int>{1, 2, 4, 6, 7, 8, 10});
  CHECK(p.rowmajor_pos == std::vector<int>{4, 7, 2, 1, 8, 6, 3, 5, 9});
  CHECK(p.colmajor_pos == std::vector<int>{4, 3, 7, 1, 8, 6, 2, 5, 9});
  CHECK(p.active_count == std::vector<int>{2, 1, 0, 2, 0, 1, 2, 1});
}

TEST_CASE("build_linked boundary: no entries") {
  PatternTriplets t;
  t.states = 1;
  t.inputs = 0;
  const LinkedPattern p = build_linked(build_ccs(t), 1);
  CHECK(p.rowmajor_pos.empty());
  CHECK(p.colmajor_pos.empty());
  CHECK(p.active_count == std::vector<int>{0});
}

TEST_CASE("fresh builds validate cleanly") {
  Rng rng(5150);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 1 + static_cast<int>(bounded_rand(rng, 10));
    const int r = static_cast<int>(bounded_rand(rng, 4));
    const int nnz = static_cast<int>(bounded_rand(rng, static_cast<std::uint64_t>(n * (n + r)) + 1));
    PatternTriplets t = random_pattern(rng, n, r, nnz);
    deterministic_shuffle(t.entries, rng);
    const LinkedPattern p = build_linked(build_ccs(t), n);
    MembershipFlags active(n + r);
    for (int i = 1; i <= n; ++i) active.set(i);
    CHECK(validate_links(p, active).empty());
  }
}

TEST_CASE("validate_links flags a corrupted link as an involution break") {
  LinkedPattern p = build_linked(build_ccs(demo6_triplets()), 6);
  p.rowmajor_pos[3] = 2;  // corrupt slot 4
  MembershipFlags active(8);
  for (int i = 1; i <= 6; ++i) active.set(i);
  const auto violations = validate_links(p, active);
  CHECK_FALSE(violations.empty());
  const bool found = std::any_of(violations.begin(), violations.end(), [](const LinkViolation& v) {
    return v.rule == LinkRule::Involution && v.position == 4;
  });
  CHECK(found);
}

TEST_CASE("validate_links flags a bad active count") {
  LinkedPattern p = build_linked(build_ccs(demo6_triplets()), 6);
  p.active_count[0] = 3;  // column 1 has only two slots
  MembershipFlags active(8);
  for (int i = 1; i <= 6; ++i) active.set(i);
  const auto violations = validate_links(p, active);
  REQUIRE(violations.size() == 1);
  CHECK(violations.front().rule == LinkRule::ActiveWindow);
  CHECK(violations.front().position == 1);
}

TEST_CASE("builders run in time linear in n + r + nnz") {
  Rng rng(31337);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 1 + static_cast<int>(bounded_rand(rng, 400));
    const int r = static_cast<int>(bounded_rand(rng, 100));
    const int nnz = static_cast<int>(bounded_rand(rng, static_cast<std::uint64_t>(n * (n + r)) + 1));
    const PatternTriplets t = random_pattern(rng, n, r, nnz);
    const std::uint64_t budget = 8ULL * (static_cast<std::uint64_t>(n) + r + nnz) + 64;
    std::uint64_t steps = 0;
    const CcsPattern x = build_ccs(t, &steps);
    CHECK(steps <= budget);
    steps = 0;
    (void)transpose(x, &steps);
    CHECK(steps <= budget);
    steps = 0;
    (void)build_linked(x, n, &steps);
    CHECK(steps <= budget);
  }
}
