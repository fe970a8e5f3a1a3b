#include "cpm/oracle.hpp"

#include <algorithm>
#include <iterator>
#include <queue>
#include <stdexcept>

namespace cpm {

std::vector<std::vector<VertexId>> brute_force_kcliques(const Graph& g, unsigned k) {
  if (k < 2) throw std::invalid_argument("clique size must be at least 2");
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<VertexId>> cliques;
  if (k > n) return cliques;

  std::vector<VertexId> subset(k);
  for (unsigned i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    bool complete = true;
    for (unsigned i = 0; i < k && complete; ++i) {
      for (unsigned j = i + 1; j < k && complete; ++j) complete = g.has_edge(subset[i], subset[j]);
    }
    if (complete) cliques.push_back(subset);

    int i = static_cast<int>(k) - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (unsigned j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return cliques;
}

Cover brute_force_cpm(const Graph& g, unsigned k) {
  const auto cliques = brute_force_kcliques(g, k);
  const std::size_t count = cliques.size();

  auto adjacent = [&](std::size_t a, std::size_t b) {
    std::vector<VertexId> common;
    std::set_intersection(cliques[a].begin(), cliques[a].end(), cliques[b].begin(),
                          cliques[b].end(), std::back_inserter(common));
    return common.size() == k - 1;
  };

  std::vector<bool> visited(count, false);
  std::vector<Community> communities;
  for (std::size_t start = 0; start < count; ++start) {
    if (visited[start]) continue;
    Community community;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    visited[start] = true;
    while (!frontier.empty()) {
      const std::size_t current = frontier.front();
      frontier.pop();
      for (const VertexId v : cliques[current]) community.push_back(g.external_id(v));
      for (std::size_t other = 0; other < count; ++other) {
        if (!visited[other] && adjacent(current, other)) {
          visited[other] = true;
          frontier.push(other);
        }
      }
    }
    communities.push_back(std::move(community));
  }
  return Cover(std::move(communities));
}

}  // namespace cpm
