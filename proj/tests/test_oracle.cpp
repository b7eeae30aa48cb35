#include <gtest/gtest.h>

#include "dyncol/generators.hpp"
#include "dyncol/oracle.hpp"

using namespace dyncol;

TEST(KColoring, Examples) {
  EXPECT_EQ(find_dynamic_k_coloring(gen_cycle(5), 3).status, SearchStatus::Infeasible);
  EXPECT_EQ(find_dynamic_k_coloring(gen_complete(4), 3).status, SearchStatus::Infeasible);
  const ColoringSearch c6 = find_dynamic_k_coloring(gen_cycle(6), 3);
  ASSERT_EQ(c6.status, SearchStatus::Found);
  EXPECT_TRUE(verify_dynamic(gen_cycle(6), *c6.coloring).ok());
  // Up to renaming colors the only dynamic 3-coloring of C6 repeats a triple.
  for (int v = 0; v < 6; ++v) EXPECT_EQ(c6.coloring->colors[v], c6.coloring->colors[(v + 3) % 6]);
}

TEST(KColoring, ProperOnly) {
  EXPECT_EQ(find_proper_k_coloring(gen_cycle(5), 2).status, SearchStatus::Infeasible);
  const ColoringSearch c = find_proper_k_coloring(gen_cycle(4), 2);
  ASSERT_EQ(c.status, SearchStatus::Found);
  EXPECT_TRUE(verify_proper(gen_cycle(4), *c.coloring).ok());
}

TEST(Exact, Dynamic) {
  EXPECT_EQ(exact_dynamic_chromatic(gen_cycle(5)).value, 5);
  EXPECT_EQ(exact_dynamic_chromatic(named_graph("prism")).value, 3);
  EXPECT_EQ(exact_dynamic_chromatic(gen_complete(4)).value, 4);
  EXPECT_EQ(exact_dynamic_chromatic(gen_path(1)).value, 1);
  EXPECT_EQ(exact_dynamic_chromatic(gen_path(2)).value, 2);
  EXPECT_EQ(exact_dynamic_chromatic(gen_path(3)).value, 3);
  const ExactResult pet = exact_dynamic_chromatic(named_graph("petersen"));
  ASSERT_TRUE(pet.value);
  EXPECT_TRUE(verify_dynamic(named_graph("petersen"), *pet.witness).ok());
}

TEST(Exact, Chromatic) {
  EXPECT_EQ(exact_chromatic(gen_cycle(5)).value, 3);
  EXPECT_EQ(exact_chromatic(gen_complete(4)).value, 4);
  EXPECT_EQ(exact_chromatic(named_graph("prism")).value, 3);
  EXPECT_EQ(exact_chromatic(named_graph("petersen")).value, 3);
  EXPECT_EQ(exact_chromatic(named_graph("k33")).value, 2);
}

TEST(Exact, DynamicEdge) {
  EXPECT_EQ(exact_dynamic_edge_chromatic(gen_cycle(3)).value, 3);
  EXPECT_EQ(exact_dynamic_edge_chromatic(gen_path(4)).value, 3);
  const Graph b = subdivide(gen_complete(4), 3);
  const ExactResult r = exact_dynamic_edge_chromatic(b);
  EXPECT_EQ(r.value, 3);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(verify_dynamic_edge(b, {3, r.witness->colors}).ok());
}

TEST(Exact, Independence) {
  EXPECT_EQ(exact_independence(named_graph("prism")).value, 2);
  EXPECT_EQ(exact_independence(gen_cycle(6)).value, 3);
  EXPECT_EQ(exact_independence(named_graph("petersen")).value, 4);
  const TriangleGraph t4 = gen_T(4, 3);
  const IndependenceResult r = exact_independence(t4.graph);
  EXPECT_EQ(r.value, 4);
  for (Vertex u : r.witness)
    for (Vertex v : r.witness) EXPECT_FALSE(t4.graph.adjacent(u, v));
}

TEST(Budget, ExhaustionIsUnknown) {
  SearchBudget tiny;
  tiny.max_nodes = 3;
  EXPECT_EQ(find_dynamic_k_coloring(named_graph("petersen"), 3, tiny).status, SearchStatus::Unknown);
  EXPECT_FALSE(exact_dynamic_chromatic(named_graph("petersen"), tiny).known());
  SearchBudget narrow;
  narrow.max_vertices = 5;
  EXPECT_EQ(find_dynamic_k_coloring(gen_cycle(6), 3, narrow).status, SearchStatus::Unknown);
  EXPECT_FALSE(exact_independence(gen_cycle(6), narrow).value);
}

TEST(Oracle, AgreesWithCycleLaw) {
  for (int n = 3; n <= 15; ++n) EXPECT_EQ(exact_dynamic_chromatic(gen_cycle(n)).value, cycle_dynamic_chromatic(n)) << n;
}

TEST(Oracle, DisconnectedGraphs) {
  // C5 plus C6: each component searched on its own.
  std::vector<Edge> edges;
  for (const Edge& e : gen_cycle(5).edges()) edges.push_back(e);
  for (const Edge& e : gen_cycle(6).edges()) edges.push_back({e.u + 5, e.v + 5});
  const Graph g = Graph::from_edges(11, edges);
  EXPECT_EQ(find_dynamic_k_coloring(g, 3).status, SearchStatus::Infeasible);
  EXPECT_EQ(exact_dynamic_chromatic(g).value, 5);
}
