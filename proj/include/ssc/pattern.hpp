#pragma once

#include <cstdint>
#include <vector>

namespace ssc {

// One *-entry position, 1-based.
struct Entry {
  int row = 0;
  int col = 0;
  bool operator==(const Entry&) const = default;
  auto operator<=>(const Entry&) const = default;
};

// Coordinate-form list of *-entry positions for an n x (n+r) structural pair:
// a square state pattern with `inputs` extra input columns appended.
struct PatternTriplets {
  int states = 0;  // n
  int inputs = 0;  // r
  std::vector<Entry> entries;

  int cols() const { return states + inputs; }
  bool operator==(const PatternTriplets&) const = default;
};

// Compressed-column pattern. Stored values are 1-based: row_ind holds row
// indices and col_ptr holds offsets into row_ind with col_ptr.front() == 1
// and col_ptr.back() == nnz + 1. Within a column the rows are distinct; their
// order is part of the value and is preserved by every operation.
struct CcsPattern {
  int rows = 0;
  int cols = 0;
  std::vector<int> row_ind;  // length nnz
  std::vector<int> col_ptr;  // length cols + 1, non-decreasing

  int nnz() const { return static_cast<int>(row_ind.size()); }
  bool has_entry(int i, int j) const;
  bool operator==(const CcsPattern&) const = default;
};

// Buckets triplets by column, keeping first-appearance order within each
// column, so the row_ind order is reproducible from the input order.
// Throws IndexOutOfRange / DuplicateEntry on invalid input.
// Optional step counter accumulates executed loop steps (linear in
// states + cols + entries).
CcsPattern build_ccs(const PatternTriplets& t, std::uint64_t* step_counter = nullptr);

// Single column-major scan; within each output column the indices appear in
// increasing order. O(rows + cols + nnz).
CcsPattern transpose(const CcsPattern& x, std::uint64_t* step_counter = nullptr);

// Expands back to triplets in column-major storage order. `states` splits the
// columns into the square part and the appended input columns.
PatternTriplets to_triplets(const CcsPattern& x, int states);

}  // namespace ssc
