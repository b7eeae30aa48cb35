#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "dyncol/colorcheck.hpp"
#include "dyncol/graph.hpp"

namespace dyncol {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Edge-list text: header "n m", then m lines "u v". '#' starts a comment.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

// Coloring file: one "vertex color" line per vertex.
VertexColoring parse_coloring(std::string_view text, std::size_t n, int k);
std::string format_coloring(const VertexColoring& c);

// Edge coloring file: one "u v color" line per edge.
EdgeColoring parse_edge_coloring(std::string_view text, const Graph& g, int k);
std::string format_edge_coloring(const Graph& g, const EdgeColoring& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace dyncol
