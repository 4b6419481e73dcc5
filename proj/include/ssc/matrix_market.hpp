#pragma once

#include <iosfwd>
#include <string>

#include "ssc/pattern.hpp"

// Matrix Market `coordinate pattern general` input/output. Entries keep file
// order on read and storage order on write, so a parse/emit round trip is the
// identity on patterns including the within-column entry order.
namespace ssc::mm {

struct MmPattern {
  int rows = 0;
  int cols = 0;
  std::vector<Entry> entries;  // file order
};

MmPattern read_pattern(std::istream& in);
MmPattern read_pattern_file(const std::string& path);

// `comment`, if nonempty, is written as %-prefixed lines after the banner.
void write_pattern(std::ostream& out, const MmPattern& m, const std::string& comment = {});
void write_pattern_file(const std::string& path, const MmPattern& m,
                        const std::string& comment = {});

struct LoadedPair {
  CcsPattern pattern;  // states x (states+inputs)
  int states = 0;
  int inputs = 0;
  PatternTriplets triplets;  // file order, input columns shifted past the state block
};

// Two files: a square state pattern and an input pattern with matching rows.
LoadedPair load_pair(const std::string& a_path, const std::string& b_path);

// One combined states x (states+inputs) file; `states` tells where the input
// columns begin.
LoadedPair load_combined(const std::string& path, int states);

// Column-major export of a compressed pattern.
MmPattern to_mm(const CcsPattern& x);

}  // namespace ssc::mm
