#include <gtest/gtest.h>

#include "dyncol/colorcheck.hpp"
#include "dyncol/generators.hpp"

using namespace dyncol;

namespace {

VertexColoring vc(std::vector<int> colors, int k = 3) { return {k, std::move(colors)}; }

}  // namespace

TEST(VerifyProper, Examples) {
  EXPECT_TRUE(verify_proper(gen_cycle(3), vc({1, 2, 3})).ok());
  const ViolationReport edge = verify_proper(gen_path(2), vc({1, 1}));
  ASSERT_EQ(edge.violations.size(), 1u);
  EXPECT_EQ(edge.violations[0].kind, ViolationKind::Adjacency);
  EXPECT_EQ(edge.violations[0].site, (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(verify_proper(gen_path(3), vc({1, 2, 1})).ok());
}

TEST(VerifyDynamic, Examples) {
  const ViolationReport p3 = verify_dynamic(gen_path(3), vc({1, 2, 1}));
  ASSERT_EQ(p3.violations.size(), 1u);
  EXPECT_EQ(p3.violations[0].kind, ViolationKind::DoubleAdjacency);
  EXPECT_EQ(p3.violations[0].site, std::vector<Vertex>{1});

  const ViolationReport c5 = verify_dynamic(gen_cycle(5), vc({1, 2, 3, 1, 2}));
  // Vertex 4 sees only color 1; vertex 0 sees only color 2.
  ASSERT_EQ(c5.violations.size(), 2u);
  EXPECT_EQ(c5.count(ViolationKind::DoubleAdjacency), 2u);
  EXPECT_EQ(c5.violations[0].site, std::vector<Vertex>{0});
  EXPECT_EQ(c5.violations[0].colors_seen, std::vector<int>{2});
  EXPECT_EQ(c5.violations[1].site, std::vector<Vertex>{4});
  EXPECT_EQ(c5.violations[1].colors_seen, std::vector<int>{1});

  EXPECT_TRUE(verify_dynamic(gen_cycle(6), vc({1, 2, 3, 1, 2, 3})).ok());
  EXPECT_EQ(verify_dynamic(gen_cycle(6), vc({1, 2, 1, 2, 1, 2})).count(ViolationKind::DoubleAdjacency), 6u);
}

TEST(VerifyDynamic, DegreeOneNeedsNothingExtra) {
  EXPECT_TRUE(verify_dynamic(gen_path(2), vc({1, 2})).ok());
  EXPECT_TRUE(verify_dynamic(Graph::from_edges(1, {}), vc({1})).ok());
}

TEST(VerifyDynamic, RejectsMalformedColorings) {
  EXPECT_THROW(verify_dynamic(gen_cycle(3), vc({1, 2})), ColoringError);
  EXPECT_THROW(verify_dynamic(gen_cycle(3), vc({1, 2, 4})), ColoringError);
  EXPECT_THROW(verify_dynamic(gen_cycle(3), vc({0, 2, 3})), ColoringError);
}

TEST(VerifyDynamicEdge, Examples) {
  EXPECT_TRUE(verify_dynamic_edge(gen_cycle(3), {3, {1, 2, 3}}).ok());
  const ViolationReport p4 = verify_dynamic_edge(gen_path(4), {3, {1, 2, 1}});
  ASSERT_EQ(p4.violations.size(), 1u);
  EXPECT_EQ(p4.violations[0].kind, ViolationKind::DoubleAdjacency);
  EXPECT_EQ(p4.violations[0].site, (std::vector<Vertex>{1, 2}));
  const Graph star = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  EXPECT_TRUE(verify_dynamic_edge(star, {3, {1, 2, 3}}).ok());
  const ViolationReport clash = verify_dynamic_edge(star, {3, {1, 1, 2}});
  ASSERT_GE(clash.count(ViolationKind::Adjacency), 1u);
  EXPECT_EQ(clash.violations[0].site, (std::vector<Vertex>{0, 1, 0, 2}));
}

TEST(ChainTransfer, Examples) {
  EXPECT_EQ(chain_transfer(3, 1, 2), (std::vector<int>{1, 3, 2}));
  EXPECT_EQ(chain_transfer(4, 1, 1), (std::vector<int>{1, 2, 3, 1}));
  EXPECT_EQ(chain_transfer(4, 1, 2), std::nullopt);
  EXPECT_EQ(chain_transfer(5, 1, 2), (std::vector<int>{1, 2, 3, 1, 2}));
  EXPECT_EQ(chain_transfer(1, 2, 2), std::vector<int>{2});
  EXPECT_EQ(chain_transfer(2, 2, 2), std::nullopt);
  EXPECT_THROW(chain_transfer(0, 1, 2), std::invalid_argument);
  EXPECT_THROW(chain_transfer(5, 0, 2), std::invalid_argument);
}

TEST(ChainTransfer, Law) {
  for (int i = 1; i <= 12; ++i) {
    for (int cu = 1; cu <= 3; ++cu) {
      for (int cv = 1; cv <= 3; ++cv) {
        const bool expected = i % 3 == 1 ? cu == cv : cu != cv;
        const auto seq = chain_transfer(i, cu, cv);
        EXPECT_EQ(seq.has_value(), expected) << i << " " << cu << " " << cv;
        if (!seq) continue;
        // Interior vertices must be proper and see two colors.
        for (int j = 1; j + 1 < i; ++j) {
          EXPECT_NE((*seq)[j], (*seq)[j - 1]);
          EXPECT_NE((*seq)[j], (*seq)[j + 1]);
          EXPECT_NE((*seq)[j - 1], (*seq)[j + 1]);
        }
      }
    }
  }
}

TEST(CycleLaw, ClosedForm) {
  EXPECT_EQ(cycle_dynamic_chromatic(5), 5);
  EXPECT_EQ(cycle_dynamic_chromatic(6), 3);
  EXPECT_EQ(cycle_dynamic_chromatic(4), 4);
  EXPECT_EQ(cycle_dynamic_chromatic(3), 3);
  EXPECT_EQ(cycle_dynamic_chromatic(7), 4);
  EXPECT_THROW(cycle_dynamic_chromatic(2), std::invalid_argument);
}
