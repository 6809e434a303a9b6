#include <gtest/gtest.h>

#include "csfkit/errors.hpp"
#include "csfkit/graphs.hpp"
#include "csfkit/symfunc.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace csfkit;

namespace {

std::vector<Edge> E(std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> out;
  for (auto [u, v] : edges) out.push_back(make_edge(u, v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Graph, ValidatesEdges) {
  EXPECT_THROW(LabeledGraph(3, {{1, 1}}), DomainError);
  EXPECT_THROW(LabeledGraph(3, {{1, 4}}), DomainError);
  EXPECT_THROW(LabeledGraph(3, {{1, 2}, {2, 1}}), DomainError);
}

TEST(Graph, Constructors) {
  EXPECT_EQ(path(3).edges(), E({{1, 2}, {2, 3}}));
  EXPECT_EQ(cycle(3).edges(), E({{1, 2}, {2, 3}, {1, 3}}));
  EXPECT_EQ(complete(4).edge_count(), 6u);
  EXPECT_EQ(tadpole(3, 1).edges(), E({{1, 2}, {2, 3}, {1, 3}, {3, 4}}));
  EXPECT_EQ(tadpole(4, 0), cycle(4));
  EXPECT_EQ(tadpole(3, 2).order(), 5);
  EXPECT_EQ(tadpole(3, 2).edge_count(), 5u);
  EXPECT_EQ(line_tadpole(3, 1).edges(), E({{1, 2}, {2, 3}, {1, 3}, {1, 4}, {3, 4}}));
  EXPECT_EQ(line_tadpole(3, 1), diamond());
  EXPECT_EQ(cycle_chord(3, 3).order(), 6);
  EXPECT_EQ(cycle_chord(3, 3).edge_count(), 7u);
  EXPECT_EQ(cc_m3_labeled(3).edges(), E({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {2, 4}}));
  EXPECT_EQ(cc_m3_labeled(4).order(), 6);
  EXPECT_EQ(cc_m3_labeled(4).edge_count(), 7u);
  EXPECT_THROW(cycle(2), DomainError);
  EXPECT_THROW(tadpole(2, 1), DomainError);
}

TEST(Graph, LineTadpoleEdgeCount) {
  for (int m = 3; m <= 6; ++m)
    for (int l = 1; l <= 3; ++l) EXPECT_EQ(line_tadpole(m, l).edge_count(), static_cast<std::size_t>(m + l + 1));
}

TEST(Graph, IsomorphismFacts) {
  EXPECT_TRUE(oracle::isomorphic(line_tadpole(3, 1), diamond()));
  EXPECT_TRUE(oracle::isomorphic(cycle_chord(2, 2), diamond()));
  // The 4-cycle cycle-chord graphs are line graphs of tadpoles one size up.
  for (int m = 3; m <= 6; ++m) EXPECT_TRUE(oracle::isomorphic(cycle_chord(m - 1, 2), line_tadpole(m, 1))) << m;
  // The labeled CC graph with m+2 vertices splits into a 4-cycle and an m-cycle.
  for (int m = 3; m <= 6; ++m) EXPECT_TRUE(oracle::isomorphic(cc_m3_labeled(m), cycle_chord(m - 1, 3))) << m;
  EXPECT_FALSE(oracle::isomorphic(claw(), path(4)));
}

TEST(Graph, DisjointUnionAndCliques) {
  const auto g = disjoint_union(path(2), complete(1));
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(disjoint_union(cycle(4), empty_graph(0)), cycle(4));
  EXPECT_EQ(clique_attach(path(2), 2), path(3));
  EXPECT_EQ(clique_attach(cycle(5), 1), cycle(5));
  for (int m = 3; m <= 5; ++m)
    for (int l = 1; l <= 2; ++l) EXPECT_EQ(clique_attach(line_tadpole(m, l), 2), line_tadpole(m, l + 1));
}

TEST(Graph, DeletionAndContraction) {
  EXPECT_EQ(contract_edge(path(3), {2, 3}), path(2));
  EXPECT_EQ(contract_edge(cycle(3), {2, 3}), path(2));
  EXPECT_THROW(contract_edge(cycle(4), {1, 2}), DomainError);
  for (const auto& e : cycle(4).edges()) EXPECT_TRUE(oracle::isomorphic(delete_edge(cycle(4), e), path(4)));
  EXPECT_THROW(delete_edge(path(3), {1, 3}), DomainError);
}

TEST(Graph, Relabel) {
  EXPECT_EQ(relabel(tadpole(3, 1), {1, 2, 3, 4}), tadpole(3, 1));
  const std::vector<int> swap{4, 2, 3, 1};
  EXPECT_EQ(relabel(relabel(tadpole(3, 1), swap), swap), tadpole(3, 1));
  EXPECT_EQ(relabel(tadpole(3, 1), swap).edges(), E({{2, 4}, {3, 4}, {2, 3}, {1, 3}}));
}

TEST(Graph, Components) {
  EXPECT_EQ(component_partition(3, {}), SetPartition::parse("1|2|3"));
  EXPECT_EQ(component_partition(3, {{1, 2}}), SetPartition::parse("12|3"));
  EXPECT_EQ(component_partition(4, {{1, 2}, {3, 4}}), SetPartition::parse("12|34"));
  EXPECT_TRUE(is_connected(cycle(5)));
  EXPECT_FALSE(is_connected(disjoint_union(path(2), path(2))));
}

TEST(Graph, ChromaticValuesMatchOracle) {
  for (const auto& g : {path(4), cycle(5), claw(), diamond(), tadpole(3, 2), complete(4), cc_m3_labeled(3)})
    for (int k = 0; k <= g.order() + 1; ++k)
      EXPECT_EQ(Rational(static_cast<unsigned long>(chromatic_polynomial_value(g, k))), oracle::chromatic_value(g, k));
}
