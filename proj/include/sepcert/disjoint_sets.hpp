#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace sepcert::detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  /// Attaches the class of `child` below the class of `root`.
  void attach(std::size_t root, std::size_t child) { parent_[find(child)] = find(root); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace sepcert::detail
