#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ssc/bench.hpp"
#include "ssc/errors.hpp"
#include "ssc/generator.hpp"
#include "ssc/matrix_market.hpp"
#include "ssc/min_input.hpp"
#include "ssc/verifier.hpp"

namespace {

ssc::Requirement parse_requirement(const std::string& s) {
  if (s.empty() || s == "none") return ssc::Requirement::kNone;
  if (s == "ssc0") return ssc::Requirement::kSscLambda0;
  if (s == "ssc") return ssc::Requirement::kSscFull;
  throw ssc::Error("unknown requirement '" + s + "'");
}

struct VerifyArgs {
  std::string a_path;
  std::string b_path;
  int state_dim = -1;
  bool as_json = false;
};

int run_verify(const VerifyArgs& args) {
  if (args.b_path.empty() && args.state_dim < 0) {
    std::cerr << "error: a combined file needs --state-dim\n";
    return 2;
  }
  if (!args.b_path.empty() && args.state_dim >= 0) {
    std::cerr << "error: give either an input-pattern file or --state-dim, not both\n";
    return 2;
  }
  const ssc::mm::LoadedPair lp = args.b_path.empty()
                                     ? ssc::mm::load_combined(args.a_path, args.state_dim)
                                     : ssc::mm::load_pair(args.a_path, args.b_path);
  ssc::RunOptions opts;
  if (const char* dbg = std::getenv("SSC_DEBUG_VALIDATE"); dbg && std::string(dbg) == "1")
    opts.validate_each_removal = true;
  const ssc::SscReport rep = ssc::is_ssc(lp.pattern, lp.states, opts);

  if (args.as_json) {
    nlohmann::json j{{"ssc", rep.ssc},
                     {"ssc_lambda0", rep.ssc_lambda0},
                     {"ssc_nonzero", rep.ssc_nonzero},
                     {"witness0", rep.mode0.witness},
                     {"witness1", rep.mode1.witness},
                     {"ops0", rep.mode0.ops},
                     {"ops1", rep.mode1.ops}};
    std::cout << j.dump(2) << "\n";
  } else {
    auto show = [](const char* label, bool pass, const ssc::VerifyOutcome& out) {
      std::cout << label << (pass ? "yes" : "no") << "  ops=" << out.ops
                << " removals=" << out.removals;
      if (!out.witness.empty()) {
        std::cout << "  witness:";
        const std::size_t shown = std::min<std::size_t>(out.witness.size(), 20);
        for (std::size_t i = 0; i < shown; ++i) std::cout << ' ' << out.witness[i];
        if (out.witness.size() > shown)
          std::cout << " ... (" << out.witness.size() << " rows, use --json for all)";
      }
      std::cout << "\n";
    };
    std::cout << "n=" << lp.states << " r=" << lp.inputs << " nnz=" << lp.pattern.nnz() << "\n";
    show("ssc_lambda0: ", rep.ssc_lambda0, rep.mode0);
    show("ssc_nonzero: ", rep.ssc_nonzero, rep.mode1);
    std::cout << "ssc: " << (rep.ssc ? "yes" : "no") << "\n";
  }
  return rep.ssc ? 0 : 1;
}

struct GenArgs {
  int n = 0;
  int r = 0;
  std::int64_t nu = 0;
  std::uint64_t seed = 0;
  std::string require = "none";
  std::string strategy = "seeded";
  int max_attempts = 64;
  std::string out_path;
};

int run_gen(const GenArgs& args) {
  ssc::GenSpec spec;
  spec.states = args.n;
  spec.inputs = args.r;
  spec.target_nnz = args.nu;
  spec.seed = args.seed;
  spec.require = parse_requirement(args.require);
  spec.strategy = (args.strategy == "uniform") ? ssc::GenSpec::Strategy::kUniform
                                               : ssc::GenSpec::Strategy::kSeeded;
  spec.max_attempts = args.max_attempts;
  ssc::GenResult gen;
  try {
    gen = ssc::generate(spec);
  } catch (const ssc::GenerationFailed& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    return 1;
  }
  const std::string comment = "seed=" + std::to_string(args.seed) + " require=" + args.require +
                              "\ncolumns 1.." + std::to_string(args.n) +
                              " are state columns, the rest are input columns";
  ssc::mm::write_pattern_file(args.out_path, ssc::mm::to_mm(gen.pattern), comment);
  std::cerr << "wrote " << args.out_path << ": n=" << args.n << " r=" << args.r
            << " nnz=" << gen.pattern.nnz() << " attempts=" << gen.attempts << "\n";
  return 0;
}

struct BenchArgs {
  std::vector<int> n_list;
  int r = 0;
  std::vector<std::int64_t> nu_list;
  std::vector<std::uint64_t> seeds{1};
  int repeats = 11;
  std::string require = "ssc0";
  int max_attempts = 16;
};

int run_bench_cmd(const BenchArgs& args) {
  std::vector<ssc::BenchCell> cells;
  for (const int n : args.n_list)
    for (const std::int64_t nu : args.nu_list)
      for (const std::uint64_t seed : args.seeds) cells.push_back({n, args.r, nu, seed});
  ssc::BenchOptions opt;
  opt.repeats = args.repeats;
  opt.require = parse_requirement(args.require);
  opt.max_attempts = args.max_attempts;
  std::vector<ssc::BenchRecord> rows;
  try {
    rows = ssc::run_bench(cells, opt);
  } catch (const ssc::GenerationFailed& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    return 1;
  }
  ssc::write_csv(std::cout, rows);
  return 0;
}

struct MinbArgs {
  std::string a_path;
  int max_r = 3;
  int max_stars = 0;  // 0 = unrestricted
  int workers = 1;
  std::uint64_t budget = 5'000'000;
};

int run_minb(const MinbArgs& args) {
  const ssc::mm::MmPattern a = ssc::mm::read_pattern_file(args.a_path);
  if (a.rows != a.cols) {
    std::cerr << "error: " << args.a_path << ": state pattern must be square\n";
    return 2;
  }
  ssc::PatternTriplets t;
  t.states = a.rows;
  t.inputs = 0;
  t.entries = a.entries;

  ssc::MinBQuery q;
  q.a = ssc::build_ccs(t);
  q.max_r = args.max_r;
  if (args.max_stars > 0) q.max_stars_per_column = args.max_stars;
  q.workers = args.workers;
  q.candidate_budget = args.budget;
  const ssc::MinBResult res = ssc::min_columns(q);

  const double ms = static_cast<double>(res.elapsed.count()) / 1e6;
  switch (res.status) {
    case ssc::MinBStatus::kFound: {
      std::cout << "minimum columns: " << res.r_min << "\n"
                << "candidates tested: " << res.candidates_tested << "\n"
                << "elapsed: " << ms << " ms\n";
      ssc::mm::write_pattern(std::cout, ssc::mm::to_mm(res.b), "witness input pattern");
      return 0;
    }
    case ssc::MinBStatus::kNoSolutionWithinMaxR:
      std::cout << "no solution with at most " << args.max_r << " column(s); tested "
                << res.candidates_tested << " candidate(s) in " << ms << " ms\n";
      return 1;
    case ssc::MinBStatus::kBudgetExceeded:
      std::cout << "candidate budget " << args.budget << " exceeded; fully searched up to "
                << res.searched_r << " column(s), tested " << res.candidates_tested
                << " candidate(s)\n";
      return 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strong structural controllability of sparse {0,*} patterns"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "decide controllability of a state/input pattern pair (exit 0 yes, 1 no, 2 error)");
  verify->add_option("a", verify_args.a_path,
                     "state pattern (n x n) or combined n x (n+r) Matrix Market file")
      ->required();
  verify->add_option("b", verify_args.b_path, "input pattern (n x r) Matrix Market file");
  verify->add_option("--state-dim", verify_args.state_dim,
                     "state count when a single combined file is given");
  verify->add_flag("--json", verify_args.as_json, "emit a JSON report");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a random pattern pair");
  gen->add_option("--n", gen_args.n, "state count")->required();
  gen->add_option("--r", gen_args.r, "input column count")->required();
  gen->add_option("--nu", gen_args.nu, "number of *-entries")->required();
  gen->add_option("--seed", gen_args.seed, "PRNG seed")->required();
  gen->add_option("--require", gen_args.require, "none | ssc0 | ssc")
      ->check(CLI::IsMember({"none", "ssc0", "ssc"}));
  gen->add_option("--strategy", gen_args.strategy,
                  "seeded (certificate construction) | uniform (rejection)")
      ->check(CLI::IsMember({"seeded", "uniform"}));
  gen->add_option("--max-attempts", gen_args.max_attempts, "generation attempts before giving up");
  gen->add_option("-o,--output", gen_args.out_path, "output .mtx path (combined n x (n+r))")
      ->required();

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "time the verifier over a generated grid (CSV)");
  bench->add_option("--n", bench_args.n_list, "state count(s)")->required()->delimiter(',');
  bench->add_option("--r", bench_args.r, "input column count")->required();
  bench->add_option("--nu", bench_args.nu_list, "*-entry count(s)")->required()->delimiter(',');
  bench->add_option("--seeds", bench_args.seeds, "seeds, one instance per seed")->delimiter(',');
  bench->add_option("--repeats", bench_args.repeats, "timed repeats per instance (median)");
  bench->add_option("--require", bench_args.require, "none | ssc0 | ssc")
      ->check(CLI::IsMember({"none", "ssc0", "ssc"}));
  bench->add_option("--max-attempts", bench_args.max_attempts, "generation attempts per cell");

  MinbArgs minb_args;
  auto* minb = app.add_subcommand(
      "minb", "smallest input-column count making the state pattern controllable");
  minb->add_option("a", minb_args.a_path, "state pattern (n x n) Matrix Market file")->required();
  minb->add_option("--max-r", minb_args.max_r, "largest column count to try");
  minb->add_option("--max-stars-per-column", minb_args.max_stars,
                   "restrict candidate columns to at most this many *-entries");
  minb->add_option("--workers", minb_args.workers, "parallel candidate testers");
  minb->add_option("--budget", minb_args.budget, "total candidate enumeration budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(verify_args);
    if (gen->parsed()) return run_gen(gen_args);
    if (bench->parsed()) return run_bench_cmd(bench_args);
    if (minb->parsed()) return run_minb(minb_args);
  } catch (const ssc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
