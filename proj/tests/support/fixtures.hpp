#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "cpm/cover.hpp"
#include "cpm/graph.hpp"
#include "cpm/kclique.hpp"

namespace cpm::testing {

using ExternalClique = std::vector<ExternalId>;
using EdgeList = std::vector<std::pair<ExternalId, ExternalId>>;

// The four 4-cliques of the small worked example with 17 edges, in the
// order they are listed there.
inline const std::vector<ExternalClique>& fig1_cliques() {
  static const std::vector<ExternalClique> cliques = {
      {1, 3, 4, 6}, {3, 6, 8, 9}, {4, 6, 7, 10}, {1, 3, 6, 9}};
  return cliques;
}

// Seven chained 4-cliques plus {4,6,7,10}, whose triangle {4,6,7} is made of
// edges from the other cliques. {4,6,7,10} is last.
inline const std::vector<ExternalClique>& fig2_cliques() {
  static const std::vector<ExternalClique> cliques = {
      {1, 3, 4, 6}, {1, 3, 6, 9}, {3, 6, 8, 9}, {6, 7, 8, 9},
      {5, 7, 8, 9}, {2, 5, 7, 8}, {2, 4, 5, 7}, {4, 6, 7, 10}};
  return cliques;
}

// Edge list of the union of the given cliques, each edge once, in clique order.
inline EdgeList clique_union_edges(const std::vector<ExternalClique>& cliques) {
  EdgeList edges;
  std::set<std::pair<ExternalId, ExternalId>> seen;
  for (const auto& c : cliques) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        const auto e = std::minmax(c[i], c[j]);
        if (seen.insert(e).second) edges.push_back(e);
      }
    }
  }
  return edges;
}

inline Graph clique_union_graph(const std::vector<ExternalClique>& cliques) {
  return Graph::from_edges(clique_union_edges(cliques));
}

// Translates external-id cliques to canonical internal keys of `g`.
inline std::vector<CliqueKey> to_keys(const Graph& g, const std::vector<ExternalClique>& cliques) {
  std::vector<CliqueKey> keys;
  for (const auto& c : cliques) {
    CliqueKey key;
    for (const ExternalId ext : c) key.push_back(*g.internal_id(ext));
    std::sort(key.begin(), key.end());
    keys.push_back(std::move(key));
  }
  return keys;
}

// G(n, p) on external ids 0..n-1. Every vertex is listed through a self-loop
// so that isolated vertices still exist and internal ids equal external ids.
inline Graph erdos_renyi(unsigned n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  EdgeList edges;
  for (ExternalId v = 0; v < n; ++v) edges.emplace_back(v, v);
  for (ExternalId u = 0; u < n; ++u) {
    for (ExternalId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(edges);
}

inline Graph complete_graph(unsigned n) {
  EdgeList edges;
  for (ExternalId v = 0; v < n; ++v) edges.emplace_back(v, v);
  for (ExternalId u = 0; u < n; ++u) {
    for (ExternalId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(edges);
}

inline std::vector<CliqueKey> collect_kcliques(const Dag& dag, unsigned k) {
  std::vector<CliqueKey> cliques;
  enumerate_kcliques(dag, k, [&](CliqueView c) { cliques.emplace_back(c.begin(), c.end()); });
  return cliques;
}

inline std::set<Community> as_set(const Cover& cover) {
  return {cover.communities().begin(), cover.communities().end()};
}

}  // namespace cpm::testing
