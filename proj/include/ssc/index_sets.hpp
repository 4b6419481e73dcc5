#pragma once

#include <cstdint>
#include <vector>

#include "ssc/errors.hpp"

namespace ssc {

// Set over the integer universe [1; capacity] with O(1) insert, remove,
// contains and pick, backed by a packed member array and a position map.
// pick() returns the most recently packed member (LIFO) without removing it.
// insert of a present element and remove of an absent one are no-ops.
class SparseIndexSet {
 public:
  explicit SparseIndexSet(int capacity)
      : pos_(static_cast<std::size_t>(capacity) + 1, 0), capacity_(capacity) {
    dense_.reserve(static_cast<std::size_t>(capacity));
  }

  void insert(int e) {
    check_range(e);
    ++steps_;
    if (pos_[static_cast<std::size_t>(e)] != 0) return;
    dense_.push_back(e);
    pos_[static_cast<std::size_t>(e)] = static_cast<int>(dense_.size());
  }

  void remove(int e) {
    check_range(e);
    ++steps_;
    const int p = pos_[static_cast<std::size_t>(e)];
    if (p == 0) return;
    const int last = dense_.back();
    dense_[static_cast<std::size_t>(p) - 1] = last;
    pos_[static_cast<std::size_t>(last)] = p;
    dense_.pop_back();
    pos_[static_cast<std::size_t>(e)] = 0;
  }

  bool contains(int e) const {
    check_range(e);
    ++steps_;
    return pos_[static_cast<std::size_t>(e)] != 0;
  }

  int pick() const {
    ++steps_;
    if (dense_.empty()) throw Error("pick on an empty set");
    return dense_.back();
  }

  bool is_empty() const {
    ++steps_;
    return dense_.empty();
  }

  int size() const { return static_cast<int>(dense_.size()); }
  int capacity() const { return capacity_; }

  // 1-based access into the packed member array.
  int member_at(int i) const {
    if (i < 1 || i > size()) throw IndexOutOfRange("member position", i, 1, size());
    return dense_[static_cast<std::size_t>(i) - 1];
  }

  std::vector<int> members() const { return dense_; }

  // Incremented exactly once per operation; none of the operations loop, so
  // steps() equals the number of executed operations.
  std::uint64_t steps() const { return steps_; }

 private:
  void check_range(int e) const {
    if (e < 1 || e > capacity_) throw IndexOutOfRange("set element", e, 1, capacity_);
  }

  std::vector<int> dense_;
  std::vector<int> pos_;  // pos_[e] = 1-based slot in dense_, 0 = absent
  int capacity_;
  mutable std::uint64_t steps_ = 0;
};

// Boolean membership flags over [1; capacity] with a running count.
class MembershipFlags {
 public:
  explicit MembershipFlags(int capacity)
      : flags_(static_cast<std::size_t>(capacity) + 1, 0), capacity_(capacity) {}

  void set(int e) {
    check_range(e);
    count_ += 1 - flags_[static_cast<std::size_t>(e)];
    flags_[static_cast<std::size_t>(e)] = 1;
  }

  void reset(int e) {
    check_range(e);
    count_ -= flags_[static_cast<std::size_t>(e)];
    flags_[static_cast<std::size_t>(e)] = 0;
  }

  bool test(int e) const {
    check_range(e);
    return flags_[static_cast<std::size_t>(e)] != 0;
  }

  int count() const { return count_; }
  int capacity() const { return capacity_; }

  std::vector<int> sorted_members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count_));
    for (int e = 1; e <= capacity_; ++e)
      if (flags_[static_cast<std::size_t>(e)] != 0) out.push_back(e);
    return out;
  }

 private:
  void check_range(int e) const {
    if (e < 1 || e > capacity_) throw IndexOutOfRange("flag element", e, 1, capacity_);
  }

  std::vector<std::uint8_t> flags_;
  int capacity_;
  int count_ = 0;
};

}  // namespace ssc
