#include "cpm/union_find.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace cpm {

UfNode UnionFind::make_set() {
  if (parent_.size() >= std::numeric_limits<UfNode>::max()) {
    throw std::length_error("union-find node space exhausted");
  }
  const auto p = static_cast<UfNode>(parent_.size());
  parent_.push_back(p);
  rank_.push_back(0);
  ++roots_;
  return p;
}

UfNode UnionFind::find(UfNode p) {
  if (p >= parent_.size()) {
    throw std::invalid_argument("unknown union-find node " + std::to_string(p));
  }
  UfNode root = p;
  while (parent_[root] != root) {
    root = parent_[root];
    ++traversals_;
  }
  while (parent_[p] != root) {
    const UfNode next = parent_[p];
    parent_[p] = root;
    p = next;
  }
  return root;
}

UfNode UnionFind::unite(std::span<const UfNode> roots) {
  if (roots.empty()) throw std::invalid_argument("union of an empty set");
  for (const UfNode r : roots) {
    if (r >= parent_.size() || parent_[r] != r) {
      throw std::invalid_argument("union argument " + std::to_string(r) + " is not a root");
    }
  }
  UfNode survivor = roots[0];
  for (const UfNode r : roots.subspan(1)) {
    // Repeated arguments have already been absorbed.
    if (r == survivor || parent_[r] != r) continue;
    UfNode winner = survivor;
    UfNode loser = r;
    if (rank_[r] > rank_[survivor] || (rank_[r] == rank_[survivor] && r < survivor)) {
      winner = r;
      loser = survivor;
    }
    parent_[loser] = winner;
    if (rank_[winner] == rank_[loser]) ++rank_[winner];
    --roots_;
    survivor = winner;
  }
  return survivor;
}

}  // namespace cpm
