#include "dyncol/colorcheck.hpp"

#include <algorithm>

namespace dyncol {

namespace {

void require_total(std::size_t expected, const std::vector<int>& colors, int k, const char* what) {
  if (colors.size() != expected) {
    throw ColoringError(std::string(what) + " coloring covers " + std::to_string(colors.size()) +
                        " of " + std::to_string(expected) + " elements");
  }
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] < 1 || colors[i] > k) {
      throw ColoringError(std::string(what) + " element " + std::to_string(i) + " has color " +
                          std::to_string(colors[i]) + " outside 1.." + std::to_string(k));
    }
  }
}

void collect_adjacency(const Graph& g, const VertexColoring& c, ViolationReport& report) {
  for (const Edge& e : g.edges()) {
    if (c.colors[e.u] == c.colors[e.v]) {
      report.violations.push_back({ViolationKind::Adjacency, {e.u, e.v}, {c.colors[e.u], c.colors[e.v]}});
    }
  }
}

std::vector<int> distinct_neighbor_colors(const Graph& g, const VertexColoring& c, Vertex v) {
  std::vector<int> seen;
  for (Vertex w : g.neighbors(v)) seen.push_back(c.colors[w]);
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  return seen;
}

}  // namespace

const char* to_string(ViolationKind kind) {
  return kind == ViolationKind::Adjacency ? "adjacency" : "double-adjacency";
}

std::size_t ViolationReport::count(ViolationKind kind) const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                [kind](const Violation& v) { return v.kind == kind; }));
}

ViolationReport verify_proper(const Graph& g, const VertexColoring& c) {
  require_total(g.vertex_count(), c.colors, c.k, "vertex");
  ViolationReport report;
  collect_adjacency(g, c, report);
  return report;
}

ViolationReport verify_dynamic(const Graph& g, const VertexColoring& c) {
  ViolationReport report = verify_proper(g, c);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    const auto v = static_cast<Vertex>(s);
    if (g.degree(v) < 2) continue;
    auto seen = distinct_neighbor_colors(g, c, v);
    if (seen.size() < 2) report.violations.push_back({ViolationKind::DoubleAdjacency, {v}, std::move(seen)});
  }
  return report;
}

ViolationReport verify_dynamic_edge(const Graph& g, const EdgeColoring& c) {
  require_total(g.edge_count(), c.colors, c.k, "edge");
  const LineGraph line = line_graph(g);
  const ViolationReport inner = verify_dynamic(line.graph, VertexColoring{c.k, c.colors});
  ViolationReport report;
  for (const Violation& v : inner.violations) {
    Violation mapped{v.kind, {}, v.colors_seen};
    for (Vertex x : v.site) {
      const Edge& e = line.edge_of_vertex[x];
      mapped.site.push_back(e.u);
      mapped.site.push_back(e.v);
    }
    report.violations.push_back(std::move(mapped));
  }
  return report;
}

std::optional<std::vector<int>> chain_transfer(int i, int cu, int cv) {
  if (i < 1) throw ColoringError("chain order must be positive");
  if (cu < 1 || cu > 3 || cv < 1 || cv > 3) throw ColoringError("chain end colors must lie in 1..3");
  // Degenerate orders: a single shared end, or a bare edge.
  if (i == 1) return cu == cv ? std::optional(std::vector<int>{cu}) : std::nullopt;
  if (i == 2) return cu != cv ? std::optional(std::vector<int>{cu, cv}) : std::nullopt;
  // With three colors each next entry avoids the previous two, so the
  // sequence is fixed by its second entry.
  for (int second = 1; second <= 3; ++second) {
    if (second == cu) continue;
    std::vector<int> s(static_cast<std::size_t>(i));
    s[0] = cu;
    s[1] = second;
    for (int j = 2; j < i; ++j) s[j] = 6 - s[j - 1] - s[j - 2];
    if (s[i - 1] == cv) return s;
  }
  return std::nullopt;
}

int cycle_dynamic_chromatic(int n) {
  if (n < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (n == 5) return 5;
  return n % 3 == 0 ? 3 : 4;
}

}  // namespace dyncol
