#include "cpm/kclique.hpp"

#include <set>

#include "cpm/oracle.hpp"
#include "gtest/gtest.h"
#include "support/fixtures.hpp"

namespace cpm {
namespace {

using testing::collect_kcliques;

Dag dag_of(const Graph& g) { return Dag(g, degeneracy_ordering(g)); }

std::set<std::vector<ExternalId>> external_set(const Graph& g, const std::vector<CliqueKey>& cliques) {
  std::set<std::vector<ExternalId>> out;
  for (const auto& c : cliques) {
    std::vector<ExternalId> ext;
    for (const VertexId v : c) ext.push_back(g.external_id(v));
    std::sort(ext.begin(), ext.end());
    out.insert(ext);
  }
  return out;
}

TEST(EnumerateKcliques, CompleteGraph) {
  const Dag dag = dag_of(testing::complete_graph(5));
  EXPECT_EQ(enumerate_kcliques(dag, 3, [](CliqueView) {}), 10u);
}

TEST(EnumerateKcliques, WorkedExampleCliques) {
  const Graph g = testing::clique_union_graph(testing::fig1_cliques());
  const auto cliques = collect_kcliques(dag_of(g), 4);
  EXPECT_EQ(cliques.size(), 4u);
  EXPECT_EQ(external_set(g, cliques),
            (std::set<std::vector<ExternalId>>{
                {1, 3, 4, 6}, {3, 6, 8, 9}, {4, 6, 7, 10}, {1, 3, 6, 9}}));
}

TEST(EnumerateKcliques, EmitsCanonicalKeys) {
  const Graph g = testing::erdos_renyi(25, 0.5, 3);
  enumerate_kcliques(dag_of(g), 4, [&](CliqueView c) {
    ASSERT_EQ(c.size(), 4u);
    EXPECT_TRUE(is_canonical(c));
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) EXPECT_TRUE(g.has_edge(c[i], c[j]));
    }
  });
}

TEST(EnumerateKcliques, MatchesBruteForceOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const double p = 0.2 + 0.1 * static_cast<double>(seed % 4);
    const Graph g = testing::erdos_renyi(25, p, seed);
    const Dag dag = dag_of(g);
    for (unsigned k = 2; k <= 6; ++k) {
      const auto listed = collect_kcliques(dag, k);
      std::set<CliqueKey> unique(listed.begin(), listed.end());
      EXPECT_EQ(unique.size(), listed.size()) << "duplicates, seed " << seed << " k " << k;
      const auto expected = brute_force_kcliques(g, k);
      EXPECT_EQ(unique, std::set<CliqueKey>(expected.begin(), expected.end()))
          << "seed " << seed << " k " << k;
    }
  }
}

TEST(EnumerateKcliques, OrderIsDeterministic) {
  const Graph g = testing::erdos_renyi(30, 0.4, 11);
  EXPECT_EQ(collect_kcliques(dag_of(g), 4), collect_kcliques(dag_of(g), 4));
}

TEST(EnumerateKcliques, RejectsSizeBelowTwo) {
  const Dag dag = dag_of(testing::complete_graph(3));
  EXPECT_THROW(enumerate_kcliques(dag, 1, [](CliqueView) {}), std::invalid_argument);
  EXPECT_THROW(count_kcliques(testing::complete_graph(3), 0), std::invalid_argument);
}

TEST(EnumerateKcliques, LargerThanCoreYieldsNothing) {
  EXPECT_EQ(count_kcliques(testing::complete_graph(6), 7), 0u);
  EXPECT_EQ(count_kcliques(Graph{}, 3), 0u);
}

TEST(EnumerateSubcliques, TrianglesOfFourClique) {
  const CliqueKey c{1, 3, 4, 6};
  std::vector<CliqueKey> subs;
  enumerate_subcliques(c, 3, [&](CliqueView s) { subs.emplace_back(s.begin(), s.end()); });
  EXPECT_EQ(subs, (std::vector<CliqueKey>{{1, 3, 4}, {1, 3, 6}, {1, 4, 6}, {3, 4, 6}}));
}

TEST(EnumerateSubcliques, PairsOfFourClique) {
  const CliqueKey c{1, 3, 4, 6};
  std::vector<CliqueKey> subs;
  enumerate_subcliques(c, 2, [&](CliqueView s) { subs.emplace_back(s.begin(), s.end()); });
  EXPECT_EQ(subs.size(), 6u);
  EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end()));
}

TEST(EnumerateSubcliques, CountsMatchBinomial) {
  const CliqueKey c{0, 2, 5, 7, 8, 11, 13};
  for (unsigned r = 1; r < c.size(); ++r) {
    std::size_t count = 0;
    enumerate_subcliques(c, r, [&](CliqueView s) {
      EXPECT_TRUE(is_canonical(s));
      ++count;
    });
    EXPECT_EQ(count, binomial(c.size(), r));
  }
}

TEST(EnumerateSubcliques, RejectsOutOfRange) {
  const CliqueKey c{1, 2, 3};
  EXPECT_THROW(enumerate_subcliques(c, 3, [](CliqueView) {}), std::invalid_argument);
  EXPECT_THROW(enumerate_subcliques(c, 0, [](CliqueView) {}), std::invalid_argument);
}

TEST(CountKcliques, Examples) {
  EXPECT_EQ(count_kcliques(testing::complete_graph(10), 5), 252u);
  EXPECT_EQ(count_kcliques(testing::clique_union_graph(testing::fig1_cliques()), 2), 17u);
}

TEST(CountKcliques, FalseMergeExampleHasEightFourCliques) {
  const Graph g = testing::clique_union_graph(testing::fig2_cliques());
  const auto oracle = brute_force_kcliques(g, 4);
  ASSERT_EQ(oracle.size(), 8u);
  EXPECT_EQ(count_kcliques(g, 4), 8u);
  EXPECT_EQ(external_set(g, oracle),
            (std::set<std::vector<ExternalId>>(testing::fig2_cliques().begin(),
                                               testing::fig2_cliques().end())));
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(5, 0), 1u);
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(40, 20), 137846528820u);
}

}  // namespace
}  // namespace cpm
