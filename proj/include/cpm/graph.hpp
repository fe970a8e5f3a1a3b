#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cpm {

using VertexId = std::uint32_t;
using ExternalId = std::uint64_t;

// Undirected simple graph in CSR form. Vertices are densely numbered
// 0..n-1 in order of first appearance in the input; the external id of
// each vertex is retained for output.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from external-id edge pairs. Self-loops are dropped and
  // duplicate edges (in either orientation) are collapsed.
  static Graph from_edges(std::span<const std::pair<ExternalId, ExternalId>> edges);

  std::size_t num_vertices() const { return external_ids_.size(); }
  std::size_t num_edges() const { return neighbors_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(VertexId u, VertexId v) const;

  ExternalId external_id(VertexId v) const { return external_ids_[v]; }
  std::span<const ExternalId> external_ids() const { return external_ids_; }
  std::optional<VertexId> internal_id(ExternalId ext) const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> neighbors_;
  std::vector<ExternalId> external_ids_;
  std::unordered_map<ExternalId, VertexId> internal_ids_;
};

// Reads a whitespace-separated edge list. Lines starting with '#' or '%'
// are comments; blank lines are skipped. Throws ParseError on bad tokens.
Graph load_edgelist(std::istream& in);

// Writes one "u v" line per edge (external ids), ordered by internal
// (u, v) with u < v.
void write_edgelist(const Graph& g, std::ostream& out);

struct CoreOrdering {
  std::vector<VertexId> order;  // peeling order
  std::vector<std::uint32_t> rank;  // rank[order[i]] == i
  std::uint32_t core = 0;
};

// Repeatedly removes a vertex of minimum remaining degree, smallest id
// first on ties.
CoreOrdering degeneracy_ordering(const Graph& g);

// Orientation of the graph along a core ordering: every edge points from
// lower to higher rank, so out-degrees are bounded by the core value.
class Dag {
 public:
  Dag(const Graph& g, const CoreOrdering& ordering);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return out_.size(); }
  std::uint32_t core() const { return core_; }

  // Out-neighbors sorted by rank.
  std::span<const VertexId> out(VertexId v) const {
    return {out_.data() + offsets_[v], out_.data() + offsets_[v + 1]};
  }
  std::uint32_t rank(VertexId v) const { return rank_[v]; }
  std::span<const VertexId> order() const { return order_; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> out_;
  std::vector<std::uint32_t> rank_;
  std::vector<VertexId> order_;
  std::uint32_t core_ = 0;
};

inline Dag build_dag(const Graph& g, const CoreOrdering& ordering) {
  return Dag(g, ordering);
}

}  // namespace cpm
