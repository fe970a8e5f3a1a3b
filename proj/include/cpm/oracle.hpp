#pragma once

#include "cpm/cover.hpp"
#include "cpm/graph.hpp"

namespace cpm {

// Reference clique percolation by direct enumeration: every k-subset is
// tested for completeness, every pair of k-cliques for a (k-1)-overlap, and
// communities are the node unions of the resulting connected components.
// Exponential; meant for graphs of a few dozen vertices.
Cover brute_force_cpm(const Graph& g, unsigned k);

// All k-cliques found by testing every k-subset, each sorted ascending,
// in lexicographic order of internal ids.
std::vector<std::vector<VertexId>> brute_force_kcliques(const Graph& g, unsigned k);

}  // namespace cpm
