#include "ssc/pattern.hpp"

#include "ssc/errors.hpp"

namespace ssc {

bool CcsPattern::has_entry(int i, int j) const {
  if (i < 1 || i > rows || j < 1 || j > cols) return false;
  for (int k = col_ptr[static_cast<std::size_t>(j) - 1]; k < col_ptr[static_cast<std::size_t>(j)];
       ++k)
    if (row_ind[static_cast<std::size_t>(k) - 1] == i) return true;
  return false;
}

CcsPattern build_ccs(const PatternTriplets& t, std::uint64_t* step_counter) {
  if (t.states < 0 || t.inputs < 0) throw Error("negative dimensions");
  const int n = t.states;
  const int m = t.cols();
  std::uint64_t steps = 0;

  std::vector<int> per_col(static_cast<std::size_t>(m) + 1, 0);
  for (const Entry& e : t.entries) {
    ++steps;
    if (e.row < 1 || e.row > n) throw IndexOutOfRange("row index", e.row, 1, n);
    if (e.col < 1 || e.col > m) throw IndexOutOfRange("column index", e.col, 1, m);
    ++per_col[static_cast<std::size_t>(e.col)];
  }

  CcsPattern x;
  x.rows = n;
  x.cols = m;
  x.col_ptr.assign(static_cast<std::size_t>(m) + 1, 1);
  for (int j = 1; j <= m; ++j) {
    ++steps;
    x.col_ptr[static_cast<std::size_t>(j)] =
        x.col_ptr[static_cast<std::size_t>(j) - 1] + per_col[static_cast<std::size_t>(j)];
  }

  x.row_ind.assign(t.entries.size(), 0);
  std::vector<int> cursor(x.col_ptr.begin(), x.col_ptr.end() - 1);
  for (const Entry& e : t.entries) {
    ++steps;
    int& slot = cursor[static_cast<std::size_t>(e.col) - 1];
    x.row_ind[static_cast<std::size_t>(slot) - 1] = e.row;
    ++slot;
  }

  // each column must list distinct rows
  std::vector<int> last_seen(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 1; j <= m; ++j) {
    for (int k = x.col_ptr[static_cast<std::size_t>(j) - 1];
         k < x.col_ptr[static_cast<std::size_t>(j)]; ++k) {
      ++steps;
      const int i = x.row_ind[static_cast<std::size_t>(k) - 1];
      if (last_seen[static_cast<std::size_t>(i)] == j) throw DuplicateEntry(i, j);
      last_seen[static_cast<std::size_t>(i)] = j;
    }
  }

  if (step_counter) *step_counter += steps + static_cast<std::uint64_t>(m) + n + 2;
  return x;
}

CcsPattern transpose(const CcsPattern& x, std::uint64_t* step_counter) {
  std::uint64_t steps = 0;
  CcsPattern z;
  z.rows = x.cols;
  z.cols = x.rows;

  std::vector<int> per_row(static_cast<std::size_t>(x.rows) + 1, 0);
  for (int i : x.row_ind) {
    ++steps;
    ++per_row[static_cast<std::size_t>(i)];
  }
  z.col_ptr.assign(static_cast<std::size_t>(x.rows) + 1, 1);
  for (int i = 1; i <= x.rows; ++i) {
    ++steps;
    z.col_ptr[static_cast<std::size_t>(i)] =
        z.col_ptr[static_cast<std::size_t>(i) - 1] + per_row[static_cast<std::size_t>(i)];
  }

  z.row_ind.assign(x.row_ind.size(), 0);
  std::vector<int> cursor(z.col_ptr.begin(), z.col_ptr.end() - 1);
  for (int j = 1; j <= x.cols; ++j) {
    for (int k = x.col_ptr[static_cast<std::size_t>(j) - 1];
         k < x.col_ptr[static_cast<std::size_t>(j)]; ++k) {
      ++steps;
      const int i = x.row_ind[static_cast<std::size_t>(k) - 1];
      int& slot = cursor[static_cast<std::size_t>(i) - 1];
      z.row_ind[static_cast<std::size_t>(slot) - 1] = j;
      ++slot;
    }
  }

  if (step_counter) *step_counter += steps + static_cast<std::uint64_t>(x.cols) + 2;
  return z;
}

PatternTriplets to_triplets(const CcsPattern& x, int states) {
  if (states < 0 || states > x.cols) throw Error("state count outside the column range");
  PatternTriplets t;
  t.states = states;
  t.inputs = x.cols - states;
  t.entries.reserve(x.row_ind.size());
  for (int j = 1; j <= x.cols; ++j)
    for (int k = x.col_ptr[static_cast<std::size_t>(j) - 1];
         k < x.col_ptr[static_cast<std::size_t>(j)]; ++k)
      t.entries.push_back({x.row_ind[static_cast<std::size_t>(k) - 1], j});
  return t;
}

}  // namespace ssc
