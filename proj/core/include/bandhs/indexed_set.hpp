#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace bandhs {

// Set of small integers in [0, capacity) with O(1) insert, erase, membership
// and uniform random access by position. Iteration order depends on the
// sequence of operations, which is deterministic.
class IndexedSet {
 public:
  using value_type = std::uint32_t;

  IndexedSet() = default;
  explicit IndexedSet(std::size_t capacity) : pos_(capacity, npos) {}

  void reset(std::size_t capacity) {
    items_.clear();
    pos_.assign(capacity, npos);
  }

  bool contains(value_type x) const { return pos_[x] != npos; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  value_type operator[](std::size_t i) const { return items_[i]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  void insert(value_type x) {
    if (pos_[x] != npos) return;
    pos_[x] = static_cast<value_type>(items_.size());
    items_.push_back(x);
  }

  void erase(value_type x) {
    const value_type p = pos_[x];
    if (p == npos) return;
    const value_type last = items_.back();
    items_[p] = last;
    pos_[last] = p;
    items_.pop_back();
    pos_[x] = npos;
  }

 private:
  static constexpr value_type npos = std::numeric_limits<value_type>::max();
  std::vector<value_type> items_;
  std::vector<value_type> pos_;
};

}  // namespace bandhs
