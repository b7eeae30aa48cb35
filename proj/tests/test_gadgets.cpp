#include <gtest/gtest.h>

#include <numeric>

#include "dyncol/classc.hpp"
#include "dyncol/gadgets.hpp"
#include "dyncol/generators.hpp"

using namespace dyncol;

namespace {
const std::vector<int> kOne{1};
}

TEST(Subdivision, Sizes) {
  const ReductionInstance k4 = subdivision_instance(gen_complete(4), kOne);
  EXPECT_EQ(k4.B.vertex_count(), 22u);
  EXPECT_EQ(k4.B.edge_count(), 24u);
  EXPECT_EQ(k4.B.max_degree(), 3);
  EXPECT_TRUE(two_coloring(k4.B));
  EXPECT_FALSE(k4.LB);

  const ReductionInstance k33 = subdivision_instance(named_graph("k33"), kOne);
  EXPECT_EQ(k33.B.vertex_count(), 33u);
  EXPECT_EQ(k33.B.edge_count(), 36u);

  const std::vector<int> mixed{1, 2, 1, 2, 2, 1};
  const ReductionInstance m = subdivision_instance(gen_complete(4), mixed);
  EXPECT_EQ(m.B.vertex_count(), 4u + 3u * std::accumulate(mixed.begin(), mixed.end(), 0u));
  EXPECT_EQ(m.B.max_degree(), 3);
}

TEST(Subdivision, Correspondence) {
  const std::vector<int> mixed{1, 2, 1, 2, 2, 1};
  const ReductionInstance inst = subdivision_instance(gen_complete(4), mixed);
  const auto source = inst.source.edges();
  ASSERT_EQ(inst.path_of_edge.size(), source.size());
  for (std::size_t e = 0; e < source.size(); ++e) {
    const auto& path = inst.path_of_edge[e];
    ASSERT_EQ(path.size(), static_cast<std::size_t>(3 * mixed[e] + 2));
    EXPECT_EQ(path.front(), source[e].u);
    EXPECT_EQ(path.back(), source[e].v);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      ASSERT_TRUE(inst.B.adjacent(path[k], path[k + 1]));
      EXPECT_EQ(inst.source_edge_of[*inst.B.edge_index(path[k], path[k + 1])], e);
    }
  }
}

TEST(Subdivision, RejectsBadInput) {
  EXPECT_THROW(subdivision_instance(gen_cycle(5), kOne), std::invalid_argument);
  const std::vector<int> two{1, 1};
  EXPECT_THROW(subdivision_instance(gen_complete(4), two), std::invalid_argument);
  const std::vector<int> zero{0};
  EXPECT_THROW(subdivision_instance(gen_complete(4), zero), std::invalid_argument);
}

TEST(ClawFree, LineGraphOfB) {
  const ReductionInstance k4 = clawfree_instance(gen_complete(4), kOne);
  ASSERT_TRUE(k4.LB);
  EXPECT_EQ(k4.LB->graph.vertex_count(), 24u);
  EXPECT_EQ(k4.LB->graph.edge_count(), 30u);
  EXPECT_EQ(k4.LB->graph.max_degree(), 3);
  EXPECT_FALSE(find_claw(k4.LB->graph));
  const MembershipVerdict verdict = recognize_C(k4.LB->graph);
  EXPECT_FALSE(verdict.member);
  ASSERT_TRUE(std::holds_alternative<ForbiddenChain>(*verdict.obstruction));
  EXPECT_EQ(std::get<ForbiddenChain>(*verdict.obstruction).chain.order(), 4);

  EXPECT_EQ(clawfree_instance(named_graph("k33"), kOne).LB->graph.vertex_count(), 36u);
}

TEST(Equivalence, Fixtures) {
  const EquivalenceReport k4 = equivalence_report(gen_complete(4), kOne);
  EXPECT_TRUE(k4.complete());
  EXPECT_TRUE(k4.consistent);
  EXPECT_EQ(k4.source_edge_3.yes, true);
  EXPECT_EQ(k4.subdivided_dynamic_edge_3.yes, true);
  EXPECT_EQ(k4.line_dynamic_3.yes, true);
  EXPECT_TRUE(k4.source_witness && k4.subdivided_witness && k4.line_witness);

  for (const char* name : {"bridged-cubic-10", "petersen"}) {
    const EquivalenceReport r = equivalence_report(named_graph(name), kOne);
    EXPECT_TRUE(r.complete()) << name;
    EXPECT_TRUE(r.consistent) << name;
    EXPECT_EQ(r.source_edge_3.yes, false) << name;
    EXPECT_EQ(r.subdivided_dynamic_edge_3.yes, false) << name;
    EXPECT_EQ(r.line_dynamic_3.yes, false) << name;
  }
}

TEST(Equivalence, BudgetGivesUnknown) {
  SearchBudget tiny;
  tiny.max_nodes = 2;
  const EquivalenceReport r = equivalence_report(named_graph("petersen"), kOne, tiny);
  EXPECT_FALSE(r.complete());
  EXPECT_TRUE(r.consistent);
}
