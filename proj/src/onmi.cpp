#include "cpm/onmi.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cpm {

namespace {

double h(double p) { return p <= 0.0 ? 0.0 : -p * std::log2(p); }

double cluster_entropy(std::size_t size, double n) {
  const double p = static_cast<double>(size) / n;
  return h(p) + h(1.0 - p);
}

std::size_t intersection_size(const Community& x, const Community& y) {
  std::size_t count = 0;
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

// Sum over clusters of x of min_j H(x_i | y_j), falling back to H(x_i) when
// no y_j is informative about x_i.
double conditional_entropy(const Cover& x, const Cover& y, double n) {
  double total = 0.0;
  for (const auto& xi : x.communities()) {
    double best = cluster_entropy(xi.size(), n);
    for (const auto& yj : y.communities()) {
      const double inter = static_cast<double>(intersection_size(xi, yj));
      const double a = (n - (static_cast<double>(xi.size() + yj.size()) - inter)) / n;
      const double b = (static_cast<double>(yj.size()) - inter) / n;
      const double c = (static_cast<double>(xi.size()) - inter) / n;
      const double d = inter / n;
      if (h(a) + h(d) <= h(b) + h(c)) continue;
      const double value = h(a) + h(b) + h(c) + h(d) - h(b + d) - h(a + c);
      best = std::min(best, value);
    }
    total += best;
  }
  return total;
}

double cover_entropy(const Cover& x, double n) {
  double total = 0.0;
  for (const auto& xi : x.communities()) total += cluster_entropy(xi.size(), n);
  return total;
}

}  // namespace

std::size_t covered_nodes(const Cover& a, const Cover& b) {
  std::vector<ExternalId> nodes;
  for (const Cover* cover : {&a, &b}) {
    for (const auto& c : cover->communities()) nodes.insert(nodes.end(), c.begin(), c.end());
  }
  std::sort(nodes.begin(), nodes.end());
  return static_cast<std::size_t>(std::distance(nodes.begin(), std::unique(nodes.begin(), nodes.end())));
}

double onmi(const Cover& a, const Cover& b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  const double n = static_cast<double>(covered_nodes(a, b));
  const double ha = cover_entropy(a, n);
  const double hb = cover_entropy(b, n);
  const double norm = std::max(ha, hb);
  if (norm == 0.0) return 1.0;
  const double mutual =
      0.5 * ((ha - conditional_entropy(a, b, n)) + (hb - conditional_entropy(b, a, n)));
  return std::clamp(mutual / norm, 0.0, 1.0);
}

double onmi(const Cover& a, const Cover& b, std::size_t universe_size) {
  const std::size_t covered = covered_nodes(a, b);
  if (covered > universe_size) {
    throw std::invalid_argument("covers reference " + std::to_string(covered) +
                                " nodes, more than the universe of " +
                                std::to_string(universe_size));
  }
  return onmi(a, b);
}

}  // namespace cpm
