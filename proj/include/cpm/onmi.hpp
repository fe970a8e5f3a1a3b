#pragma once

#include <cstddef>

#include "cpm/cover.hpp"

namespace cpm {

// Overlapping normalized mutual information, max-normalized variant of
// McDaid, Greene and Hurley (2011) with the Lancichinetti et al. constraint
// on informative cluster pairs.
//
// Entropies are taken over the nodes covered by at least one of the two
// covers; nodes outside every community carry no information and are left
// out. Conventions: two empty covers score 1, one empty cover scores 0, and
// covers whose communities all span the covered nodes (zero entropy on both
// sides) score 1.
double onmi(const Cover& a, const Cover& b);

// Same, but checks that the covers reference at most `universe_size`
// distinct nodes; throws std::invalid_argument otherwise.
double onmi(const Cover& a, const Cover& b, std::size_t universe_size);

// Number of distinct nodes referenced by either cover.
std::size_t covered_nodes(const Cover& a, const Cover& b);

}  // namespace cpm
