#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cpm {

using UfNode = std::uint32_t;

// Disjoint-set forest with path compression and union by rank.
//
// unite() takes a set of roots and merges them in one call: the survivor is
// the root of maximal rank, smallest id on ties. Callers pass find() results;
// a non-root argument is a contract violation and throws.
class UnionFind {
 public:
  UfNode make_set();
  UfNode find(UfNode p);
  UfNode unite(std::span<const UfNode> roots);

  bool is_root(UfNode p) const { return parent_.at(p) == p; }
  UfNode parent(UfNode p) const { return parent_.at(p); }
  std::uint8_t rank(UfNode p) const { return rank_.at(p); }

  std::size_t count_nodes() const { return parent_.size(); }
  std::size_t count_roots() const { return roots_; }
  // Parent pointers followed by find() since construction.
  std::uint64_t traversals() const { return traversals_; }

 private:
  std::vector<UfNode> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t roots_ = 0;
  std::uint64_t traversals_ = 0;
};

}  // namespace cpm
