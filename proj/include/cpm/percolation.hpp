#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "cpm/clique_index.hpp"
#include "cpm/graph.hpp"
#include "cpm/kclique.hpp"
#include "cpm/union_find.hpp"

namespace cpm {

enum class Mode { cpm, cpmz };

const char* to_string(Mode mode);

struct RunStats {
  std::uint64_t n_k = 0;
  std::uint64_t finds = 0;
  std::uint64_t unions = 0;
  std::uint64_t makesets = 0;
  std::uint64_t peak_keys = 0;
  // Root reductions of a z-clique's node set (cpmz only).
  std::uint64_t reductions = 0;
  // Sum of node-set sizes seen by those reductions, before reducing.
  std::uint64_t setz_sum = 0;
  // Largest node set seen by a reduction.
  std::uint64_t setz_max = 0;
  double wall_time = 0.0;

  double setz_mean() const {
    return reductions == 0 ? 0.0 : static_cast<double>(setz_sum) / static_cast<double>(reductions);
  }
};

struct PercolationOptions {
  // Reduce every z-subclique of every (k-1)-subclique even after the
  // running intersection is already empty.
  bool strict_reduce = false;
  // Abort with ResourceLimitError once key storage would exceed this.
  std::optional<std::uint64_t> memory_limit_bytes;
};

using NodeSet = boost::container::small_vector<UfNode, 2>;

// Union-find forest plus the map from stored cliques to its nodes. For cpm
// the keys are (k-1)-cliques and `dict[slot]` is the node of key `slot`;
// for cpmz the keys are z-cliques and `setz[slot]` lists their nodes.
struct PercResult {
  Mode mode = Mode::cpm;
  unsigned k = 0;
  unsigned z = 0;
  UnionFind uf;
  CliqueIndex keys{1};
  std::vector<UfNode> dict;
  std::vector<NodeSet> setz;
  RunStats stats;

  // keys x key width x id size
  std::uint64_t key_storage_bytes() const {
    return static_cast<std::uint64_t>(keys.size()) * keys.width() * sizeof(VertexId);
  }
};

// Exact clique percolation over a stream of canonical k-cliques. Feed
// cliques with add() and collect the forest with finish().
class CpmRunner {
 public:
  explicit CpmRunner(unsigned k, PercolationOptions options = {});

  void add(CliqueView clique);
  PercResult finish() &&;

  // Node the most recently added clique was merged into.
  UfNode last_node() const { return last_; }

 private:
  PercResult result_;
  PercolationOptions options_;
  std::vector<UfNode> roots_;
  UfNode last_ = 0;
  std::chrono::steady_clock::time_point start_;
};

// Memory-lean relaxation: a (k-1)-clique is located through the node sets
// of its z-subcliques. Communities may come out merged compared with the
// exact run but are never split. Requires 2 <= z <= k-2.
class CpmzRunner {
 public:
  CpmzRunner(unsigned k, unsigned z, PercolationOptions options = {});

  void add(CliqueView clique);
  PercResult finish() &&;

  UfNode last_node() const { return last_; }

 private:
  const NodeSet& reduce(Slot slot);
  void add_node(CliqueView zclique, UfNode q);

  PercResult result_;
  PercolationOptions options_;
  // z-subsets of a k-clique as positions, and for each (k-1)-subset the
  // indices of its z-subsets in that list.
  std::vector<std::vector<VertexId>> zsubs_;
  std::vector<std::vector<std::size_t>> faces_;
  std::vector<VertexId> zkey_;
  std::vector<std::optional<Slot>> slots_;
  std::vector<UfNode> merge_;
  UfNode last_ = 0;
  NodeSet running_;
  NodeSet scratch_;
  std::chrono::steady_clock::time_point start_;
};

PercResult run_cpm(const Dag& dag, unsigned k, PercolationOptions options = {});
PercResult run_cpm(std::span<const CliqueKey> cliques, unsigned k,
                   PercolationOptions options = {});

PercResult run_cpmz(const Dag& dag, unsigned k, unsigned z, PercolationOptions options = {});
PercResult run_cpmz(std::span<const CliqueKey> cliques, unsigned k, unsigned z,
                    PercolationOptions options = {});

}  // namespace cpm
