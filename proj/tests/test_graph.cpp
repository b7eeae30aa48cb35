#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "dyncol/generators.hpp"
#include "dyncol/graph.hpp"

using namespace dyncol;

namespace {

Graph paw() { return Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {0, 3}}); }
Graph star() { return Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}); }

}  // namespace

TEST(Graph, BuildsTriangle) {
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g, gen_cycle(3));
  EXPECT_TRUE(g.adjacent(2, 0));
}

TEST(Graph, BuildsK4) {
  std::vector<Edge> all;
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) all.push_back({u, v});
  const Graph g = Graph::from_edges(4, all);
  EXPECT_EQ(g, gen_complete(4));
  EXPECT_EQ(g.max_degree(), 3);
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph::from_edges(4, std::vector<Edge>{{0, 0}}), GraphError);
  EXPECT_THROW(Graph::from_edges(2, std::vector<Edge>{{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(Graph::from_edges(2, std::vector<Edge>{{0, 2}}), GraphError);
  try {
    Graph::from_edges(3, std::vector<Edge>{{0, 1}, {2, 2}});
    FAIL();
  } catch (const GraphError& e) {
    ASSERT_TRUE(e.edge());
    EXPECT_EQ(*e.edge(), (Edge{2, 2}));
  }
}

TEST(Graph, CanonicalEdgeOrder) {
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{3, 2}, {1, 0}, {2, 0}});
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {2, 3}};
  EXPECT_EQ(g.edges(), expected);
  EXPECT_EQ(g.edge_index(3, 2), 2u);
  EXPECT_EQ(g.edge_index(1, 2), std::nullopt);
}

TEST(Graph, DegreeStats) {
  const DegreeStats k4 = degree_stats(gen_complete(4));
  EXPECT_EQ(k4.min_degree, 3);
  EXPECT_EQ(k4.max_degree, 3);
  EXPECT_EQ(k4.count_by_degree, (std::map<int, std::size_t>{{3, 4}}));
  EXPECT_EQ(degree_stats(gen_path(3)).count_by_degree, (std::map<int, std::size_t>{{1, 2}, {2, 1}}));
  EXPECT_EQ(degree_stats(paw()).count_by_degree, (std::map<int, std::size_t>{{1, 1}, {2, 2}, {3, 1}}));
}

TEST(Graph, Components) {
  const Graph g = Graph::from_edges(7, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].size(), 3u);
  EXPECT_EQ(comps[1].size(), 4u);
  EXPECT_EQ(connected_components(gen_complete(4)).size(), 1u);
  EXPECT_TRUE(connected_components(Graph::from_edges(0, {})).empty());
}

TEST(Graph, InducedSubgraph) {
  const Graph g = gen_complete(4);
  const std::vector<Vertex> pick{3, 1, 2};
  const InducedSubgraph sub = induced_subgraph(g, pick);
  EXPECT_EQ(sub.graph, gen_cycle(3));
  EXPECT_EQ(sub.to_parent, pick);
}

TEST(Claws, Star) {
  const auto claw = find_claw(star());
  ASSERT_TRUE(claw);
  EXPECT_EQ(claw->center, 0);
  EXPECT_EQ(claw->leaves, (std::array<Vertex, 3>{1, 2, 3}));
}

TEST(Claws, K33HasOnePrismHasNone) {
  EXPECT_TRUE(find_claw(named_graph("k33")));
  EXPECT_FALSE(find_claw(named_graph("prism")));
  EXPECT_FALSE(find_claw(gen_complete(4)));
}

TEST(Chains, K4WithSubdividedEdge) {
  const Graph g = subdivide(gen_complete(4), std::vector<int>{2, 0, 0, 0, 0, 0});
  const ChainInventory inv = chain_inventory(g);
  const auto internal = inv.internal_chains();
  ASSERT_EQ(internal.size(), 1u);
  EXPECT_EQ(internal[0]->order(), 4);
  EXPECT_EQ(*internal[0]->first_end, 0);
  EXPECT_EQ(*internal[0]->last_end, 1);
  EXPECT_FALSE(internal[0]->ends_adjacent);
}

TEST(Chains, PawHasPendantPath) {
  const ChainInventory inv = chain_inventory(paw());
  EXPECT_TRUE(inv.internal_chains().empty());
  const auto pendant = std::count_if(inv.chains.begin(), inv.chains.end(),
                                     [](const Chain& c) { return c.kind == ChainKind::PendantPath; });
  EXPECT_EQ(pendant, 1);
  const auto it = std::find_if(inv.chains.begin(), inv.chains.end(),
                               [](const Chain& c) { return c.kind == ChainKind::PendantPath; });
  EXPECT_EQ(it->members, std::vector<Vertex>{3});
  EXPECT_EQ(*it->first_end, 0);
}

TEST(Chains, PendantTriangleAndA3Kinds) {
  // Triangle 1-2-3 hanging off 0, itself part of triangle 0-4-5 ... closed by 4-5.
  const Graph g = Graph::from_edges(
      6, std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {4, 5}});
  const ChainInventory inv = chain_inventory(g);
  std::multiset<ChainKind> kinds;
  for (const Chain& c : inv.chains) kinds.insert(c.kind);
  EXPECT_EQ(kinds.count(ChainKind::PendantTriangle), 2u);

  const ChainInventory prism_a3 = chain_inventory(subdivide(named_graph("prism"), std::vector<int>{1, 0, 0, 0, 0, 0, 0, 0, 0}));
  ASSERT_EQ(prism_a3.internal_chains().size(), 1u);
  EXPECT_EQ(prism_a3.internal_chains()[0]->order(), 3);
}

TEST(Chains, PureComponents) {
  const ChainInventory c6 = chain_inventory(gen_cycle(6));
  ASSERT_EQ(c6.chains.size(), 1u);
  EXPECT_EQ(c6.chains[0].kind, ChainKind::PureCycle);
  EXPECT_EQ(c6.chains[0].members.size(), 6u);
  const ChainInventory p5 = chain_inventory(gen_path(5));
  ASSERT_EQ(p5.chains.size(), 1u);
  EXPECT_EQ(p5.chains[0].kind, ChainKind::PurePath);
  EXPECT_THROW(chain_inventory(gen_complete(5)), GraphError);
}

TEST(Bipartite, Basics) {
  const auto p4 = two_coloring(gen_path(4));
  ASSERT_TRUE(p4);
  for (Vertex v = 0; v + 1 < 4; ++v) EXPECT_NE(p4->side[v], p4->side[v + 1]);
  EXPECT_FALSE(two_coloring(gen_cycle(5)));
  const Graph c8 = gen_cycle(8);
  const auto sides = two_coloring(c8);
  ASSERT_TRUE(sides);
  for (const Edge& e : c8.edges()) EXPECT_NE(sides->side[e.u], sides->side[e.v]);
}

TEST(LineGraph, SmallCases) {
  const LineGraph p3 = line_graph(gen_path(3));
  EXPECT_EQ(p3.graph.vertex_count(), 2u);
  EXPECT_EQ(p3.graph.edge_count(), 1u);
  EXPECT_EQ(line_graph(gen_cycle(3)).graph, gen_cycle(3));
  const LineGraph k4 = line_graph(gen_complete(4));
  EXPECT_EQ(k4.graph.vertex_count(), 6u);
  EXPECT_EQ(k4.graph.edge_count(), 12u);
  EXPECT_EQ(k4.edge_of_vertex, gen_complete(4).edges());
}

TEST(LineGraph, SubdividedK4) {
  const Graph b = subdivide(gen_complete(4), 3);
  EXPECT_EQ(b.vertex_count(), 22u);
  EXPECT_EQ(b.edge_count(), 24u);
  const LineGraph lb = line_graph(b);
  EXPECT_EQ(lb.graph.vertex_count(), 24u);
  EXPECT_EQ(lb.graph.edge_count(), 30u);
}

TEST(Subdivide, CountsAndIdentity) {
  const Graph k4 = gen_complete(4);
  EXPECT_EQ(subdivide(k4, 0), k4);
  // New vertices are appended after the originals.
  EXPECT_EQ(subdivide(gen_path(2), 2), Graph::from_edges(4, std::vector<Edge>{{0, 2}, {2, 3}, {3, 1}}));
  EXPECT_TRUE(two_coloring(subdivide(k4, 3)));
  EXPECT_THROW(subdivide(k4, std::vector<int>{1, 2}), GraphError);
}

TEST(Generators, TriangleGraphs) {
  for (int t : {2, 4, 6, 10, 50}) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const TriangleGraph tg = gen_T(t, seed);
      ASSERT_EQ(tg.graph.vertex_count(), static_cast<std::size_t>(3 * t));
      ASSERT_EQ(degree_stats(tg.graph).count_by_degree.at(3), static_cast<std::size_t>(3 * t));
      ASSERT_EQ(connected_components(tg.graph).size(), 1u);
      ASSERT_EQ(tg.decomposition.triangles.size(), static_cast<std::size_t>(t));
      ASSERT_EQ(tg.decomposition.matching.size(), static_cast<std::size_t>(3 * t / 2));
      ASSERT_FALSE(find_claw(tg.graph));
    }
  }
  // Two triangles joined by a perfect matching is always the prism.
  const Graph prism = gen_T(2, 99).graph;
  EXPECT_EQ(prism.edge_count(), 9u);
  EXPECT_FALSE(two_coloring(prism));
  EXPECT_THROW(gen_T(3, 1), std::invalid_argument);
}

TEST(Generators, Deterministic) {
  EXPECT_EQ(gen_T(40, 7).graph, gen_T(40, 7).graph);
  EXPECT_NE(gen_T(40, 7).graph, gen_T(40, 8).graph);
  const auto a = gen_C_corpus(50, {}, 11);
  const auto b = gen_C_corpus(50, {}, 11);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].graph, b[i].graph);
  Rng r1(5), r2(5);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(r1.below(17), r2.below(17));
}

TEST(Generators, RngBelowIsUniformEnough) {
  Rng rng(1);
  std::array<int, 6> hits{};
  for (int i = 0; i < 60000; ++i) ++hits[rng.below(6)];
  for (int h : hits) EXPECT_NEAR(h, 10000, 500);
}

TEST(Generators, ExceptionalAndNamed) {
  const Graph e3 = gen_E(3);
  EXPECT_EQ(e3.vertex_count(), 5u);
  EXPECT_EQ(e3.edge_count(), 7u);
  EXPECT_FALSE(e3.adjacent(0, 1));
  EXPECT_EQ(gen_E(2), gen_complete(4));
  EXPECT_EQ(gen_cycle(5).edge_count(), 5u);
  for (const auto& name : named_graph_names()) {
    const Graph g = named_graph(name);
    EXPECT_EQ(degree_stats(g).min_degree, 3) << name;
    EXPECT_EQ(degree_stats(g).max_degree, 3) << name;
  }
  EXPECT_EQ(named_graph("bridged-cubic-10").vertex_count(), 10u);
  EXPECT_EQ(named_graph("petersen").vertex_count(), 10u);
  EXPECT_THROW(named_graph("nope"), std::invalid_argument);
}
