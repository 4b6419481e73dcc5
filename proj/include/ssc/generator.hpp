#pragma once

#include <cstdint>

#include "ssc/pattern.hpp"

namespace ssc {

enum class Requirement { kNone, kSscLambda0, kSscFull };

struct GenSpec {
  int states = 0;              // n
  int inputs = 0;              // r
  std::int64_t target_nnz = 0;
  std::uint64_t seed = 0;
  Requirement require = Requirement::kNone;
  int max_attempts = 64;

  // kUniform draws positions uniformly over the grid and rejects until the
  // requirement holds; usable only where the acceptance rate is nontrivial
  // (tiny or requirement-free instances). kSeeded plants a random removal
  // certificate (a peel order with one fresh column per step) and scatters
  // the remaining entries uniformly over certificate-safe cells. Both are
  // deterministic for a fixed seed, and the requirement is always checked
  // with the verifier before a pattern is returned.
  enum class Strategy { kSeeded, kUniform };
  Strategy strategy = Strategy::kSeeded;
};

struct GenResult {
  PatternTriplets triplets;  // canonical column-major order
  CcsPattern pattern;
  int attempts = 0;
};

// Throws GenerationFailed when the requirement is unsatisfiable for the
// given dimensions or no attempt succeeded within max_attempts.
GenResult generate(const GenSpec& spec);

}  // namespace ssc
