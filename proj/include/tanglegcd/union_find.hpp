#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace tanglegcd {

// Plain disjoint-set forest with path halving. reset() restores n singletons
// without reallocating, so one instance can be reused across smoothing states.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { reset(); }

  void reset() { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true if the two sets were distinct and are now merged; false when
  // the elements were already connected (a redundant union closes a cycle).
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace tanglegcd
