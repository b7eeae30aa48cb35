#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyncol/graph.hpp"

namespace dyncol {

class ColoringError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Colors are 1..k. A coloring "with palette k" need not use every color.
struct VertexColoring {
  int k = 0;
  std::vector<int> colors;

  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
};

/// Colors indexed by the canonical edge order of the graph.
struct EdgeColoring {
  int k = 0;
  std::vector<int> colors;
};

enum class ViolationKind { Adjacency, DoubleAdjacency };

const char* to_string(ViolationKind kind);

/// `site` is {v} for a vertex and {u, v} for an edge. For an adjacency
/// violation of an edge coloring it lists both edges, {u1, v1, u2, v2}.
struct Violation {
  ViolationKind kind = ViolationKind::Adjacency;
  std::vector<Vertex> site;
  std::vector<int> colors_seen;
};

struct ViolationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(ViolationKind kind) const;
};

ViolationReport verify_proper(const Graph& g, const VertexColoring& c);
ViolationReport verify_dynamic(const Graph& g, const VertexColoring& c);
ViolationReport verify_dynamic_edge(const Graph& g, const EdgeColoring& c);

/// Colors s[0..i-1] of an A_i with end colors cu and cv such that every
/// interior vertex is properly and dynamically colored with palette {1,2,3}.
/// i = 1 is a single vertex (cu must equal cv); i = 2 is one edge.
std::optional<std::vector<int>> chain_transfer(int i, int cu, int cv);

/// Exact dynamic chromatic number of the cycle C_n.
int cycle_dynamic_chromatic(int n);

}  // namespace dyncol
