#include "ssc/linked_pattern.hpp"

#include "ssc/errors.hpp"

namespace ssc {

LinkedPattern build_linked(const CcsPattern& x, int states, std::uint64_t* step_counter) {
  if (x.rows != states) throw Error("state count does not match the pattern's row count");
  if (x.cols < states) throw Error("pattern needs at least one column per state");
  std::uint64_t steps = 0;

  LinkedPattern p;
  p.states = states;
  p.inputs = x.cols - states;
  p.nnz = x.nnz();
  p.row_ind = x.row_ind;
  p.col_ptr = x.col_ptr;

  const int n = states;
  const int m = x.cols;
  const int nu = p.nnz;

  // transpose scan; also fills the forward links
  std::vector<int> per_row(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 1; k <= nu; ++k) {
    ++steps;
    ++per_row[static_cast<std::size_t>(p.row_ind[static_cast<std::size_t>(k) - 1])];
  }
  p.row_ptr.assign(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) {
    ++steps;
    p.row_ptr[static_cast<std::size_t>(i)] =
        p.row_ptr[static_cast<std::size_t>(i) - 1] + per_row[static_cast<std::size_t>(i)];
  }
  p.col_ind.assign(static_cast<std::size_t>(nu), 0);
  p.rowmajor_pos.assign(static_cast<std::size_t>(nu), 0);
  std::vector<int> cursor(p.row_ptr.begin(), p.row_ptr.end() - 1);
  for (int j = 1; j <= m; ++j) {
    for (int k = p.col_ptr[static_cast<std::size_t>(j) - 1];
         k < p.col_ptr[static_cast<std::size_t>(j)]; ++k) {
      ++steps;
      const int i = p.row_ind[static_cast<std::size_t>(k) - 1];
      int& slot = cursor[static_cast<std::size_t>(i) - 1];
      p.col_ind[static_cast<std::size_t>(slot) - 1] = j;
      p.rowmajor_pos[static_cast<std::size_t>(k) - 1] = slot;
      ++slot;
    }
  }

  // the reverse links are the (unique) inverse permutation
  p.colmajor_pos.assign(static_cast<std::size_t>(nu), 0);
  for (int k = 1; k <= nu; ++k) {
    ++steps;
    p.colmajor_pos[static_cast<std::size_t>(p.rowmajor_pos[static_cast<std::size_t>(k) - 1]) - 1] =
        k;
  }

  // every row starts active: the active window is the whole column
  p.active_count.assign(static_cast<std::size_t>(m), 0);
  for (int v = 1; v <= m; ++v) {
    ++steps;
    p.active_count[static_cast<std::size_t>(v) - 1] =
        p.col_ptr[static_cast<std::size_t>(v)] - p.col_ptr[static_cast<std::size_t>(v) - 1];
  }

  if (step_counter) *step_counter += steps + static_cast<std::uint64_t>(n) + m + 2;
  return p;
}

const char* to_string(LinkRule rule) {
  switch (rule) {
    case LinkRule::CcsShape: return "ccs-shape";
    case LinkRule::LinkIntoRow: return "link-into-row";
    case LinkRule::LinkMatchesColumn: return "link-matches-column";
    case LinkRule::LinkIntoColumn: return "link-into-column";
    case LinkRule::LinkMatchesRow: return "link-matches-row";
    case LinkRule::Involution: return "involution";
    case LinkRule::ActiveWindow: return "active-window";
  }
  return "unknown";
}

std::vector<LinkViolation> validate_links(const LinkedPattern& p, const MembershipFlags& active) {
  std::vector<LinkViolation> out;
  auto add = [&](LinkRule rule, int pos, std::string detail) {
    out.push_back(LinkViolation{rule, pos, std::move(detail)});
  };
  const int n = p.states;
  const int m = p.cols();
  const int nu = p.nnz;

  // shapes and ranges first; the deeper checks index through these arrays
  bool shape_ok = true;
  auto shape = [&](bool cond, int pos, const std::string& detail) {
    if (!cond) {
      shape_ok = false;
      add(LinkRule::CcsShape, pos, detail);
    }
  };
  shape(n >= 0 && p.inputs >= 0 && nu >= 0, 0, "negative dimensions");
  shape(static_cast<int>(p.row_ind.size()) == nu && static_cast<int>(p.col_ind.size()) == nu &&
            static_cast<int>(p.rowmajor_pos.size()) == nu &&
            static_cast<int>(p.colmajor_pos.size()) == nu,
        0, "entry array lengths differ from nnz");
  shape(static_cast<int>(p.col_ptr.size()) == m + 1 && static_cast<int>(p.row_ptr.size()) == n + 1,
        0, "offset array lengths");
  shape(static_cast<int>(p.active_count.size()) == m, 0, "active count length");
  shape(active.capacity() == m, 0, "active set capacity");
  if (!shape_ok) return out;

  shape(p.col_ptr.front() == 1 && p.col_ptr.back() == nu + 1, 0,
        "column offsets must span the entry array");
  shape(p.row_ptr.front() == 1 && p.row_ptr.back() == nu + 1, 0,
        "row offsets must span the entry array");
  for (int j = 1; j <= m && shape_ok; ++j)
    shape(p.col_ptr[static_cast<std::size_t>(j) - 1] <= p.col_ptr[static_cast<std::size_t>(j)], j,
          "column offsets must be non-decreasing");
  for (int i = 1; i <= n && shape_ok; ++i)
    shape(p.row_ptr[static_cast<std::size_t>(i) - 1] <= p.row_ptr[static_cast<std::size_t>(i)], i,
          "row offsets must be non-decreasing");
  if (!shape_ok) return out;

  for (int k = 1; k <= nu && shape_ok; ++k) {
    const auto idx = static_cast<std::size_t>(k) - 1;
    shape(p.row_ind[idx] >= 1 && p.row_ind[idx] <= n, k, "row index out of range");
    shape(p.col_ind[idx] >= 1 && p.col_ind[idx] <= m, k, "column index out of range");
    shape(p.rowmajor_pos[idx] >= 1 && p.rowmajor_pos[idx] <= nu, k,
          "forward link out of range");
    shape(p.colmajor_pos[idx] >= 1 && p.colmajor_pos[idx] <= nu, k,
          "reverse link out of range");
  }
  if (!shape_ok) return out;

  {
    std::vector<int> stamp(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 1; j <= m; ++j)
      for (int k = p.col_ptr[static_cast<std::size_t>(j) - 1];
           k < p.col_ptr[static_cast<std::size_t>(j)]; ++k) {
        const int i = p.row_ind[static_cast<std::size_t>(k) - 1];
        if (stamp[static_cast<std::size_t>(i)] == j)
          shape(false, j, "repeated row inside a column segment");
        stamp[static_cast<std::size_t>(i)] = j;
      }
  }
  {
    std::vector<int> stamp(static_cast<std::size_t>(m) + 1, 0);
    for (int i = 1; i <= n; ++i)
      for (int l = p.row_ptr[static_cast<std::size_t>(i) - 1];
           l < p.row_ptr[static_cast<std::size_t>(i)]; ++l) {
        const int j = p.col_ind[static_cast<std::size_t>(l) - 1];
        if (stamp[static_cast<std::size_t>(j)] == i)
          shape(false, i, "repeated column inside a row segment");
        stamp[static_cast<std::size_t>(j)] = i;
      }
  }
  if (!shape_ok) return out;

  // forward links stay inside the entry's row segment and describe the
  // same column
  for (int k = 1; k <= nu; ++k) {
    const int i = p.row_ind[static_cast<std::size_t>(k) - 1];
    const int l = p.rowmajor_pos[static_cast<std::size_t>(k) - 1];
    if (!(p.row_ptr[static_cast<std::size_t>(i) - 1] <= l &&
          l < p.row_ptr[static_cast<std::size_t>(i)]))
      add(LinkRule::LinkIntoRow, k, "forward link leaves the row segment of its entry");
  }
  for (int j = 1; j <= m; ++j)
    for (int k = p.col_ptr[static_cast<std::size_t>(j) - 1];
         k < p.col_ptr[static_cast<std::size_t>(j)]; ++k)
      if (p.col_ind[static_cast<std::size_t>(p.rowmajor_pos[static_cast<std::size_t>(k) - 1]) -
                    1] != j)
        add(LinkRule::LinkMatchesColumn, k, "forward link lands on a different column");

  // reverse links, symmetrically
  for (int l = 1; l <= nu; ++l) {
    const int j = p.col_ind[static_cast<std::size_t>(l) - 1];
    const int k = p.colmajor_pos[static_cast<std::size_t>(l) - 1];
    if (!(p.col_ptr[static_cast<std::size_t>(j) - 1] <= k &&
          k < p.col_ptr[static_cast<std::size_t>(j)]))
      add(LinkRule::LinkIntoColumn, l, "reverse link leaves the column segment of its entry");
  }
  for (int i = 1; i <= n; ++i)
    for (int l = p.row_ptr[static_cast<std::size_t>(i) - 1];
         l < p.row_ptr[static_cast<std::size_t>(i)]; ++l)
      if (p.row_ind[static_cast<std::size_t>(p.colmajor_pos[static_cast<std::size_t>(l) - 1]) -
                    1] != i)
        add(LinkRule::LinkMatchesRow, l, "reverse link lands on a different row");

  // the two link arrays must be mutually inverse
  for (int k = 1; k <= nu; ++k) {
    if (p.colmajor_pos[static_cast<std::size_t>(p.rowmajor_pos[static_cast<std::size_t>(k) - 1]) -
                       1] != k)
      add(LinkRule::Involution, k, "links are not mutually inverse at a column-major slot");
    if (p.rowmajor_pos[static_cast<std::size_t>(p.colmajor_pos[static_cast<std::size_t>(k) - 1]) -
                       1] != k)
      add(LinkRule::Involution, k, "links are not mutually inverse at a row-major slot");
  }

  // active windows: the leading slots of each column hold exactly the active
  // rows of that column
  for (int v = 1; v <= m; ++v) {
    const int lo = p.col_ptr[static_cast<std::size_t>(v) - 1];
    const int hi = p.col_ptr[static_cast<std::size_t>(v)];
    const int c = p.active_count[static_cast<std::size_t>(v) - 1];
    if (c < 0 || c > hi - lo) {
      add(LinkRule::ActiveWindow, v, "active count outside the column segment");
      continue;
    }
    for (int k = lo; k < lo + c; ++k)
      if (!active.test(p.row_ind[static_cast<std::size_t>(k) - 1])) {
        add(LinkRule::ActiveWindow, v, "inactive row inside the active window");
        break;
      }
    for (int k = lo + c; k < hi; ++k)
      if (active.test(p.row_ind[static_cast<std::size_t>(k) - 1])) {
        add(LinkRule::ActiveWindow, v, "active row outside the active window");
        break;
      }
  }

  return out;
}

}  // namespace ssc
