#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpm/graph.hpp"

namespace cpm {

// A clique as a strictly increasing sequence of internal vertex ids.
using CliqueKey = std::vector<VertexId>;
using CliqueView = std::span<const VertexId>;

inline bool is_canonical(CliqueView c) {
  return std::adjacent_find(c.begin(), c.end(), [](VertexId a, VertexId b) { return a >= b; }) ==
         c.end();
}

namespace detail {

template <typename Emit>
class KCliqueLister {
 public:
  KCliqueLister(const Dag& dag, unsigned k, Emit& emit)
      : dag_(dag), k_(k), emit_(emit), stack_(k), key_(k), levels_(k) {
    for (auto& level : levels_) level.reserve(dag.core());
  }

  std::uint64_t run() {
    for (const VertexId u : dag_.order()) {
      const auto out = dag_.out(u);
      if (out.size() < k_ - 1) continue;
      stack_[0] = u;
      levels_[1].assign(out.begin(), out.end());
      descend(1);
    }
    return count_;
  }

 private:
  // stack_[0..depth) is fixed; levels_[depth] holds the common
  // out-neighbors of the stack, sorted by rank.
  void descend(unsigned depth) {
    const auto& candidates = levels_[depth];
    if (depth + 1 == k_) {
      for (const VertexId v : candidates) {
        stack_[depth] = v;
        std::copy(stack_.begin(), stack_.end(), key_.begin());
        std::sort(key_.begin(), key_.end());
        ++count_;
        emit_(CliqueView(key_));
      }
      return;
    }
    const std::size_t needed = k_ - depth;
    for (std::size_t i = 0; i + needed <= candidates.size(); ++i) {
      const VertexId v = candidates[i];
      stack_[depth] = v;
      intersect(candidates, i + 1, dag_.out(v), levels_[depth + 1]);
      if (levels_[depth + 1].size() + 1 >= needed) descend(depth + 1);
    }
  }

  void intersect(const std::vector<VertexId>& candidates, std::size_t from,
                 std::span<const VertexId> out, std::vector<VertexId>& result) const {
    result.clear();
    std::size_t i = from;
    std::size_t j = 0;
    while (i < candidates.size() && j < out.size()) {
      const auto ri = dag_.rank(candidates[i]);
      const auto rj = dag_.rank(out[j]);
      if (ri < rj) {
        ++i;
      } else if (rj < ri) {
        ++j;
      } else {
        result.push_back(candidates[i]);
        ++i;
        ++j;
      }
    }
  }

  const Dag& dag_;
  unsigned k_;
  Emit& emit_;
  std::vector<VertexId> stack_;
  std::vector<VertexId> key_;
  std::vector<std::vector<VertexId>> levels_;
  std::uint64_t count_ = 0;
};

}  // namespace detail

// Streams every k-clique of the graph underlying `dag` exactly once as a
// canonical key. Order is fixed by the dag's core ordering. Returns the
// number of cliques emitted.
template <typename Emit>
std::uint64_t enumerate_kcliques(const Dag& dag, unsigned k, Emit&& emit) {
  if (k < 2) throw std::invalid_argument("clique size must be at least 2");
  detail::KCliqueLister<std::remove_reference_t<Emit>> lister(dag, k, emit);
  return lister.run();
}

// Emits all r-subsets of `c` in lexicographic order.
template <typename Emit>
void enumerate_subcliques(CliqueView c, unsigned r, Emit&& emit) {
  if (r < 1 || r >= c.size()) {
    throw std::invalid_argument("subclique size " + std::to_string(r) +
                                " out of range for clique of size " + std::to_string(c.size()));
  }
  std::vector<std::size_t> idx(r);
  for (unsigned i = 0; i < r; ++i) idx[i] = i;
  std::vector<VertexId> sub(r);
  const std::size_t n = c.size();
  while (true) {
    for (unsigned i = 0; i < r; ++i) sub[i] = c[idx[i]];
    emit(CliqueView(sub));
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (unsigned j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t count_kcliques(const Graph& g, unsigned k);

std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

}  // namespace cpm
