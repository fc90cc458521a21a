#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace gpd {

// Disjoint sets whose representative is always the least member.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::size_t size() const noexcept { return parent_.size(); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];  // path halving
      x = parent_[x];
    }
    return x;
  }

  /// Returns true if two classes were merged.
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  /// Dense class labels numbered in order of least member; writes the class count.
  std::vector<std::uint32_t> labels(std::size_t& count) {
    std::vector<std::uint32_t> label(parent_.size());
    count = 0;
    for (std::uint32_t i = 0; i < parent_.size(); ++i) {
      const std::uint32_t r = find(i);
      label[i] = r == i ? static_cast<std::uint32_t>(count++) : label[r];
    }
    return label;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace gpd
