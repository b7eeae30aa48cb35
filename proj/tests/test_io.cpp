#include <gtest/gtest.h>

#include <filesystem>

#include "dyncol/generators.hpp"
#include "dyncol/graph_io.hpp"

using namespace dyncol;

TEST(GraphText, Parses) {
  EXPECT_EQ(parse_graph("3 3\n0 1\n1 2\n2 0"), gen_cycle(3));
  EXPECT_EQ(parse_graph("2 1\n0 1\n"), gen_path(2));
  EXPECT_EQ(parse_graph("# comment\n\n2 1   # header\n  1 0\t\n"), gen_path(2));
  EXPECT_EQ(parse_graph("0 0\n").vertex_count(), 0u);
}

TEST(GraphText, ReportsLines) {
  auto line_of = [](std::string_view text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("2 2\n0 1\n0 1\n"), 3u);  // duplicate edge
  EXPECT_EQ(line_of("3 1\n0 5\n"), 2u);       // out of range
  EXPECT_EQ(line_of("3 1\n0 x\n"), 2u);
  EXPECT_EQ(line_of("3 2\n0 1\n"), 2u);       // too few edges
  EXPECT_EQ(line_of("3 1\n0 1\n1 2\n"), 3u);  // too many edges
  EXPECT_EQ(line_of("3\n"), 1u);
  EXPECT_EQ(line_of(""), 1u);
  EXPECT_EQ(line_of("2 1\n1 1\n"), 2u);
}

TEST(GraphText, RoundTrip) {
  for (const auto& name : named_graph_names()) {
    const Graph g = named_graph(name);
    EXPECT_EQ(parse_graph(format_graph(g)), g) << name;
  }
  const Graph t = gen_T(30, 4).graph;
  EXPECT_EQ(parse_graph(format_graph(t)), t);
}

TEST(ColoringText, RoundTrip) {
  const VertexColoring c{3, {1, 2, 3, 1, 2, 3}};
  EXPECT_EQ(parse_coloring(format_coloring(c), 6, 3), c);
  // Range and coverage are the verifier's business, not the parser's.
  EXPECT_THROW(parse_coloring("0 1\n1 4\n", 2, 3), ColoringError);
  EXPECT_THROW(parse_coloring("0 1\n", 2, 3), ColoringError);
  EXPECT_THROW(parse_coloring("0 1\n1 x\n", 2, 3), ParseError);
  EXPECT_THROW(parse_coloring("0 1\n0 2\n", 2, 3), ParseError);
}

TEST(ColoringText, EdgeRoundTrip) {
  const Graph p4 = gen_path(4);
  const EdgeColoring c{3, {1, 2, 1}};
  const EdgeColoring back = parse_edge_coloring(format_edge_coloring(p4, c), p4, 3);
  EXPECT_EQ(back.colors, c.colors);
  EXPECT_THROW(parse_edge_coloring("0 2 1\n", p4, 3), ParseError);
}

TEST(Files, WriteRead) {
  const auto path = std::filesystem::temp_directory_path() / "dyncol_io_test.txt";
  write_file(path.string(), "2 1\n0 1\n");
  EXPECT_EQ(parse_graph(read_file(path.string())), gen_path(2));
  std::filesystem::remove(path);
  EXPECT_THROW(read_file(path.string()), std::runtime_error);
}
