#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "ssc/bench.hpp"
#include "ssc/errors.hpp"
#include "ssc/generator.hpp"
#include "ssc/matrix_market.hpp"
#include "ssc/verifier.hpp"
#include "support.hpp"

using namespace ssc;
using test::demo6_triplets;
using test::random_pattern;

namespace {

const std::string kData = SSC_TEST_DATA_DIR;

}  // namespace

TEST_CASE("the shipped demo fixtures parse into the pinned storage") {
  const mm::LoadedPair lp = mm::load_pair(kData + "/demo6_A.mtx", kData + "/demo6_B.mtx");
  CHECK(lp.states == 6);
  CHECK(lp.inputs == 2);
  CHECK(lp.pattern.nnz() == 9);
  CHECK(lp.pattern.col_ptr == std::vector<int>{1, 3, 4, 4, 6, 6, 7, 9, 10});
  CHECK(lp.pattern.row_ind == std::vector<int>{3, 5, 2, 1, 6, 4, 2, 3, 6});
  CHECK(lp.pattern == build_ccs(demo6_triplets()));

  const mm::LoadedPair combined = mm::load_combined(kData + "/demo6_AB.mtx", 6);
  CHECK(combined.pattern == lp.pattern);
}

TEST_CASE("an input pattern with zero columns is accepted") {
  std::istringstream b_file("%%MatrixMarket matrix coordinate pattern general\n6 0 0\n");
  const mm::MmPattern b = mm::read_pattern(b_file);
  CHECK(b.rows == 6);
  CHECK(b.cols == 0);
  CHECK(b.entries.empty());
}

TEST_CASE("parser rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return mm::read_pattern(in);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 0.5\n"),
                  ParseError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix array pattern general\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate pattern symmetric\n1 1 0\n"),
                  ParseError);
  CHECK_THROWS_AS(parse("banner missing\n1 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate pattern general\n2 2\n"), ParseError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n3 1\n"),
                  ParseError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 1 7\n"),
                  ParseError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate pattern general\n2 2 2\n1 1\n"),
                  ParseError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 1\n2 2\n"),
                  ParseError);
  CHECK_THROWS_AS(mm::read_pattern_file(kData + "/does_not_exist.mtx"), ParseError);
}

TEST_CASE("pair loading validates the dimensions") {
  CHECK_THROWS_AS(mm::load_pair(kData + "/demo6_B.mtx", kData + "/demo6_B.mtx"), ParseError);
  CHECK_THROWS_AS(mm::load_combined(kData + "/demo6_AB.mtx", 5), ParseError);
  CHECK_THROWS_AS(mm::load_combined(kData + "/demo6_AB.mtx", 9), ParseError);
}

TEST_CASE("duplicate entries in a file surface as build errors") {
  const std::string path = "dup_fixture.mtx";
  {
    std::ofstream out(path);
    out << "%%MatrixMarket matrix coordinate pattern general\n2 2 2\n1 2\n1 2\n";
  }
  CHECK_THROWS_AS(mm::load_combined(path, 2), DuplicateEntry);
}

TEST_CASE("write/read round trip is the identity, including entry order") {
  Rng rng(314);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + static_cast<int>(bounded_rand(rng, 9));
    const int r = static_cast<int>(bounded_rand(rng, 4));
    const int nnz = static_cast<int>(bounded_rand(rng, static_cast<std::uint64_t>(n * (n + r)) + 1));
    PatternTriplets t = random_pattern(rng, n, r, nnz);
    deterministic_shuffle(t.entries, rng);
    const CcsPattern x = build_ccs(t);

    std::ostringstream out;
    mm::write_pattern(out, mm::to_mm(x), "round trip");
    std::istringstream in(out.str());
    const mm::MmPattern back = mm::read_pattern(in);
    PatternTriplets t2;
    t2.states = n;
    t2.inputs = r;
    t2.entries = back.entries;
    CHECK(build_ccs(t2) == x);
  }
}

TEST_CASE("generation is reproducible for a fixed seed") {
  GenSpec spec;
  spec.states = 40;
  spec.inputs = 10;
  spec.target_nnz = 300;
  spec.seed = 99;
  spec.require = Requirement::kSscLambda0;
  const GenResult a = generate(spec);
  const GenResult b = generate(spec);
  CHECK(a.triplets == b.triplets);
  CHECK(a.pattern == b.pattern);
  CHECK(a.attempts == b.attempts);
}

TEST_CASE("requirement-free generation accepts the first draw") {
  GenSpec spec;
  spec.states = 12;
  spec.inputs = 3;
  spec.target_nnz = 50;
  spec.seed = 5;
  const GenResult g = generate(spec);
  CHECK(g.attempts == 1);
  CHECK(g.pattern.nnz() == 50);
}

TEST_CASE("impossible requirements fail loudly") {
  GenSpec spec;
  spec.states = 2;
  spec.inputs = 0;
  spec.target_nnz = 0;
  spec.seed = 1;
  spec.require = Requirement::kSscLambda0;
  CHECK_THROWS_AS(generate(spec), GenerationFailed);
  spec.target_nnz = 5;
  CHECK_THROWS_AS(generate(spec), Error);  // exceeds the grid
  spec.target_nnz = 2;
  spec.require = Requirement::kSscFull;
  CHECK_THROWS_AS(generate(spec), GenerationFailed);  // full needs an input column
}

TEST_CASE("seeded generation meets its requirement at benchmark scale") {
  GenSpec spec;
  spec.states = 1000;
  spec.inputs = 250;
  spec.target_nnz = 50000;
  spec.seed = 123;
  spec.require = Requirement::kSscLambda0;
  const GenResult g = generate(spec);
  CHECK(g.pattern.nnz() == 50000);
  LinkedPattern p = build_linked(g.pattern, 1000);
  CHECK(run(p, Mode::kLambdaZero).is_empty_witness);
}

TEST_CASE("seeded generation can satisfy the full requirement") {
  GenSpec spec;
  spec.states = 20;
  spec.inputs = 4;
  spec.target_nnz = 80;
  spec.seed = 3;
  spec.require = Requirement::kSscFull;
  const GenResult g = generate(spec);
  CHECK(is_ssc(g.pattern, 20).ssc);
}

TEST_CASE("uniform rejection works where acceptance is not hopeless") {
  GenSpec spec;
  spec.states = 3;
  spec.inputs = 1;
  spec.target_nnz = 5;
  spec.seed = 17;
  spec.require = Requirement::kSscLambda0;
  spec.strategy = GenSpec::Strategy::kUniform;
  spec.max_attempts = 2000;
  const GenResult g = generate(spec);
  LinkedPattern p = build_linked(g.pattern, 3);
  CHECK(run(p, Mode::kLambdaZero).is_empty_witness);
  CHECK(g.attempts >= 1);
}

TEST_CASE("bench emits one row per cell and mode with a stable schema") {
  const std::vector<BenchCell> cells = {{200, 50, 1200, 1}, {200, 50, 1200, 2}};
  BenchOptions opt;
  opt.repeats = 3;
  const auto rows = run_bench(cells, opt);
  REQUIRE(rows.size() == 4);
  for (const auto& rec : rows) {
    CHECK(rec.states == 200);
    CHECK(rec.ops > 0);
    if (rec.mode == 0) CHECK(rec.witness_empty);
  }
  std::ostringstream csv;
  write_csv(csv, rows);
  const std::string text = csv.str();
  CHECK(text.rfind("n,r,nu,seed,L,time_ns,ops,removals,verdict\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
}

TEST_CASE("bench with one repeat and one cell yields one row per mode") {
  BenchOptions opt;
  opt.repeats = 1;
  const auto rows = run_bench({{50, 10, 150, 9}}, opt);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].mode == 0);
  CHECK(rows[1].mode == 1);
}

TEST_CASE("line fit recovers exact linear data") {
  const LinearFit fit = fit_line({1, 2, 3, 4}, {3, 5, 7, 9});
  CHECK(fit.slope == doctest::Approx(2.0));
  CHECK(fit.intercept == doctest::Approx(1.0));
  CHECK(fit.r_squared == doctest::Approx(1.0));
  CHECK(median({3.0, 1.0, 2.0}) == doctest::Approx(2.0));
  CHECK(median({4.0, 1.0, 2.0, 3.0}) == doctest::Approx(2.5));
}
