#include <gtest/gtest.h>

#include "dyncol/generators.hpp"
#include "dyncol/report.hpp"

using namespace dyncol;

TEST(ReportJson, GraphSummary) {
  const auto j = report::graph_summary(gen_path(3));
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["m"], 2);
  EXPECT_EQ(j["degree_counts"]["1"], 2);
  EXPECT_EQ(j.dump(), report::graph_summary(gen_path(3)).dump());
}

TEST(ReportJson, Violations) {
  const auto j = report::violations(verify_dynamic(gen_cycle(5), {3, {1, 2, 3, 1, 2}}));
  EXPECT_EQ(j["ok"], false);
  ASSERT_EQ(j["violations"].size(), 2u);
  EXPECT_EQ(j["violations"][1]["kind"], "double-adjacency");
  EXPECT_EQ(j["violations"][1]["site"], report::Json::array({4}));
  EXPECT_EQ(j["violations"][1]["colors_seen"], report::Json::array({1}));
}

TEST(ReportJson, Membership) {
  const auto j = report::membership(recognize_C(Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}})));
  EXPECT_EQ(j["member"], false);
  EXPECT_EQ(j["obstruction"]["kind"], "claw");
  EXPECT_EQ(j["obstruction"]["center"], 0);
}

TEST(ReportJson, Trace) {
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  const auto j = report::reduction(reduce_to_T(g));
  ASSERT_EQ(j["steps"].size(), 2u);
  EXPECT_EQ(j["steps"][0]["kind"], "pendant-triangle-strip");
  EXPECT_EQ(j["steps"][0]["removed"], report::Json::array({1, 2}));
  EXPECT_EQ(j["steps"][0]["anchors"], report::Json::array({0}));
  EXPECT_TRUE(j["steps"][0]["added_edge"].is_null());
  EXPECT_EQ(j["steps"][1]["kind"], "closed-form-component");
  EXPECT_EQ(j["steps"][1]["shape"], "path");
  EXPECT_TRUE(j["terminal_vertices"].empty());
}

TEST(ReportJson, Decision) {
  const auto j = report::decision(decide_dyn3(gen_complete(4)));
  EXPECT_EQ(j["colorable"], false);
  EXPECT_EQ(j["reason"], "exceptional-E");
  EXPECT_EQ(j["components"].size(), 1u);
}
