#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssc/index_sets.hpp"
#include "ssc/pattern.hpp"

namespace ssc {

// Working state for the linear-time verification: the column-major pattern,
// its transpose, mutual position links between the two entry orderings, and
// per-column active-row counts. All stored values are 1-based.
//
// Removals permute row_ind and the link arrays in place so that the active
// rows of column v always occupy the leading active_count[v-1] slots of the
// column's segment; the position set itself never changes.
struct LinkedPattern {
  int states = 0;  // n
  int inputs = 0;  // r
  int nnz = 0;

  // column-major pattern (mutated by removals)
  std::vector<int> row_ind;
  std::vector<int> col_ptr;
  // row-major pattern (fixed after build)
  std::vector<int> col_ind;
  std::vector<int> row_ptr;
  // rowmajor_pos[k-1] is the slot in col_ind describing the same entry as
  // slot k of row_ind; colmajor_pos is its inverse permutation.
  std::vector<int> rowmajor_pos;
  std::vector<int> colmajor_pos;
  // active_count[v-1] = number of still-active rows in column v
  std::vector<int> active_count;

  int cols() const { return states + inputs; }
};

// Builds the full linked representation with every row active. The forward
// links are filled during the transpose scan; the reverse links are its
// inverse permutation. O(states + inputs + nnz).
LinkedPattern build_linked(const CcsPattern& x, int states,
                           std::uint64_t* step_counter = nullptr);

enum class LinkRule {
  CcsShape,           // array lengths, offsets, ranges, within-segment distinctness
  LinkIntoRow,        // forward link must stay inside its entry's row segment
  LinkMatchesColumn,  // forward link must land on the same column
  LinkIntoColumn,     // reverse link must stay inside its entry's column segment
  LinkMatchesRow,     // reverse link must land on the same row
  Involution,         // the two link arrays must be mutually inverse
  ActiveWindow,       // leading slots of a column = active rows of that column
};

const char* to_string(LinkRule rule);

struct LinkViolation {
  LinkRule rule;
  int position = 0;  // offending 1-based slot or column index
  std::string detail;
};

// Checks every defining property of the linked representation against the
// given active-row set (capacity states + inputs). Empty result means the
// state is consistent. Test/debug utility; O(states + inputs + nnz).
std::vector<LinkViolation> validate_links(const LinkedPattern& p, const MembershipFlags& active);

}  // namespace ssc
