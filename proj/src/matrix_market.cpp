#include "ssc/matrix_market.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "ssc/errors.hpp"

namespace ssc::mm {

namespace {

std::string lower(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

bool is_blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

bool is_comment(const std::string& s) {
  const auto pos = s.find_first_not_of(" \t");
  return pos != std::string::npos && s[pos] == '%';
}

}  // namespace

MmPattern read_pattern(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty input: missing banner");
  {
    std::istringstream banner(line);
    std::string magic, object, format, field, symmetry;
    banner >> magic >> object >> format >> field >> symmetry;
    if (lower(magic) != "%%matrixmarket") throw ParseError("malformed banner: " + line);
    if (lower(object) != "matrix") throw ParseError("unsupported object '" + object + "'");
    if (lower(format) != "coordinate")
      throw ParseError("unsupported format '" + format + "' (coordinate required)");
    if (lower(field) != "pattern")
      throw ParseError("unsupported field '" + field + "' (pattern required)");
    if (lower(symmetry) != "general")
      throw ParseError("unsupported symmetry '" + symmetry + "' (general required)");
  }

  auto next_data_line = [&in](std::string& out_line) {
    while (std::getline(in, out_line)) {
      if (is_blank(out_line) || is_comment(out_line)) continue;
      return true;
    }
    return false;
  };

  if (!next_data_line(line)) throw ParseError("missing size line");
  long long rows = -1, cols = -1, nnz = -1;
  {
    std::istringstream ss(line);
    std::string rest;
    if (!(ss >> rows >> cols >> nnz) || (ss >> rest))
      throw ParseError("malformed size line: " + line);
  }
  constexpr long long kMaxDim = std::numeric_limits<int>::max();
  if (rows < 0 || cols < 0 || nnz < 0 || rows > kMaxDim || cols > kMaxDim)
    throw ParseError("size out of range: " + line);
  if (nnz > rows * cols) throw ParseError("entry count exceeds the grid size");

  MmPattern m;
  m.rows = static_cast<int>(rows);
  m.cols = static_cast<int>(cols);
  m.entries.reserve(static_cast<std::size_t>(nnz));
  for (long long e = 0; e < nnz; ++e) {
    if (!next_data_line(line))
      throw ParseError("unexpected end of input after " + std::to_string(e) + " of " +
                       std::to_string(nnz) + " entries");
    std::istringstream ss(line);
    long long i = 0, j = 0;
    std::string rest;
    if (!(ss >> i >> j)) throw ParseError("malformed entry line: " + line);
    if (ss >> rest) throw ParseError("pattern entries take no values: " + line);
    if (i < 1 || i > rows)
      throw ParseError("row index " + std::to_string(i) + " outside [1;" + std::to_string(rows) +
                       "]");
    if (j < 1 || j > cols)
      throw ParseError("column index " + std::to_string(j) + " outside [1;" +
                       std::to_string(cols) + "]");
    m.entries.push_back({static_cast<int>(i), static_cast<int>(j)});
  }
  while (std::getline(in, line))
    if (!is_blank(line) && !is_comment(line))
      throw ParseError("trailing content after the declared entries: " + line);
  return m;
}

MmPattern read_pattern_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return read_pattern(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_pattern(std::ostream& out, const MmPattern& m, const std::string& comment) {
  out << "%%MatrixMarket matrix coordinate pattern general\n";
  if (!comment.empty()) {
    std::istringstream ss(comment);
    std::string cl;
    while (std::getline(ss, cl)) out << "% " << cl << "\n";
  }
  out << m.rows << " " << m.cols << " " << m.entries.size() << "\n";
  for (const Entry& e : m.entries) out << e.row << " " << e.col << "\n";
}

void write_pattern_file(const std::string& path, const MmPattern& m, const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_pattern(out, m, comment);
  if (!out) throw Error("write failed for '" + path + "'");
}

LoadedPair load_pair(const std::string& a_path, const std::string& b_path) {
  const MmPattern a = read_pattern_file(a_path);
  if (a.rows != a.cols) throw ParseError(a_path + ": state pattern must be square");
  const MmPattern b = read_pattern_file(b_path);
  if (b.rows != a.rows)
    throw ParseError(b_path + ": row count " + std::to_string(b.rows) +
                     " differs from the state pattern's " + std::to_string(a.rows));
  LoadedPair lp;
  lp.states = a.rows;
  lp.inputs = b.cols;
  lp.triplets.states = lp.states;
  lp.triplets.inputs = lp.inputs;
  lp.triplets.entries = a.entries;
  lp.triplets.entries.reserve(a.entries.size() + b.entries.size());
  for (const Entry& e : b.entries) lp.triplets.entries.push_back({e.row, e.col + lp.states});
  lp.pattern = build_ccs(lp.triplets);
  return lp;
}

LoadedPair load_combined(const std::string& path, int states) {
  if (states < 0) throw ParseError("state dimension must be non-negative");
  const MmPattern c = read_pattern_file(path);
  if (c.rows != states)
    throw ParseError(path + ": row count " + std::to_string(c.rows) +
                     " disagrees with the state dimension " + std::to_string(states));
  if (c.cols < states)
    throw ParseError(path + ": fewer columns than states (" + std::to_string(c.cols) + " < " +
                     std::to_string(states) + ")");
  LoadedPair lp;
  lp.states = states;
  lp.inputs = c.cols - states;
  lp.triplets.states = lp.states;
  lp.triplets.inputs = lp.inputs;
  lp.triplets.entries = c.entries;
  lp.pattern = build_ccs(lp.triplets);
  return lp;
}

MmPattern to_mm(const CcsPattern& x) {
  MmPattern m;
  m.rows = x.rows;
  m.cols = x.cols;
  m.entries.reserve(x.row_ind.size());
  for (int j = 1; j <= x.cols; ++j)
    for (int k = x.col_ptr[static_cast<std::size_t>(j) - 1];
         k < x.col_ptr[static_cast<std::size_t>(j)]; ++k)
      m.entries.push_back({x.row_ind[static_cast<std::size_t>(k) - 1], j});
  return m;
}

}  // namespace ssc::mm
