#include "cpm/kclique.hpp"

namespace cpm {

std::uint64_t count_kcliques(const Graph& g, unsigned k) {
  if (k < 2) throw std::invalid_argument("clique size must be at least 2");
  const Dag dag(g, degeneracy_ordering(g));
  return enumerate_kcliques(dag, k, [](CliqueView) {});
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) result = result * (n - r + i) / i;
  return result;
}

}  // namespace cpm
