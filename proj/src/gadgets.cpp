#include "dyncol/gadgets.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dyncol {

namespace {

std::vector<int> expand_j(const Graph& cubic, std::span<const int> j) {
  for (std::size_t v = 0; v < cubic.vertex_count(); ++v) {
    if (cubic.degree(static_cast<Vertex>(v)) != 3) {
      throw std::invalid_argument("source graph is not cubic: vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(cubic.degree(static_cast<Vertex>(v))));
    }
  }
  if (cubic.vertex_count() == 0) throw std::invalid_argument("source graph is empty");
  std::vector<int> out;
  if (j.size() == 1) {
    out.assign(cubic.edge_count(), j[0]);
  } else if (j.size() == cubic.edge_count()) {
    out.assign(j.begin(), j.end());
  } else {
    throw std::invalid_argument("expected 1 or " + std::to_string(cubic.edge_count()) + " subdivision parameters, got " +
                                std::to_string(j.size()));
  }
  if (std::any_of(out.begin(), out.end(), [](int x) { return x < 1; })) {
    throw std::invalid_argument("subdivision parameters must be positive");
  }
  return out;
}

}  // namespace

ReductionInstance subdivision_instance(const Graph& cubic, std::span<const int> j) {
  ReductionInstance inst;
  inst.source = cubic;
  inst.j = expand_j(cubic, j);
  std::vector<int> times(inst.j.size());
  std::transform(inst.j.begin(), inst.j.end(), times.begin(), [](int x) { return 3 * x; });
  inst.B = subdivide(cubic, times);

  // subdivide() appends interior ids edge by edge, from e.u towards e.v.
  const auto source_edges = cubic.edges();
  auto next = static_cast<Vertex>(cubic.vertex_count());
  inst.path_of_edge.resize(source_edges.size());
  inst.source_edge_of.assign(inst.B.edge_count(), 0);
  for (std::size_t e = 0; e < source_edges.size(); ++e) {
    auto& path = inst.path_of_edge[e];
    path.push_back(source_edges[e].u);
    for (int k = 0; k < times[e]; ++k) path.push_back(next++);
    path.push_back(source_edges[e].v);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) inst.source_edge_of[*inst.B.edge_index(path[k], path[k + 1])] = e;
  }
  return inst;
}

ReductionInstance clawfree_instance(const Graph& cubic, std::span<const int> j) {
  ReductionInstance inst = subdivision_instance(cubic, j);
  inst.LB = line_graph(inst.B);
  return inst;
}

bool EquivalenceReport::complete() const {
  return source_edge_3.yes && subdivided_dynamic_edge_3.yes && line_dynamic_3.yes;
}

EquivalenceReport equivalence_report(const Graph& cubic, std::span<const int> j, const SearchBudget& budget) {
  const ReductionInstance inst = clawfree_instance(cubic, j);
  EquivalenceReport report;

  const LineGraph lc = line_graph(cubic);
  const ExactResult a = exact_chromatic(lc.graph, budget);
  report.source_edge_3.nodes = a.nodes;
  if (a.value) {
    report.source_edge_3.yes = *a.value <= 3;
    if (*report.source_edge_3.yes) {
      report.source_witness = EdgeColoring{3, a.witness->colors};
      if (!verify_proper(lc.graph, *a.witness).ok()) report.consistent = false;
    }
  }

  const ExactResult b = exact_dynamic_edge_chromatic(inst.B, budget);
  report.subdivided_dynamic_edge_3.nodes = b.nodes;
  if (b.value) {
    report.subdivided_dynamic_edge_3.yes = *b.value <= 3;
    if (*report.subdivided_dynamic_edge_3.yes) {
      report.subdivided_witness = EdgeColoring{3, b.witness->colors};
      if (!verify_dynamic_edge(inst.B, *report.subdivided_witness).ok()) report.consistent = false;
    }
  }

  const ColoringSearch c = find_dynamic_k_coloring(inst.LB->graph, 3, budget);
  report.line_dynamic_3.nodes = c.nodes;
  if (c.status != SearchStatus::Unknown) {
    report.line_dynamic_3.yes = c.status == SearchStatus::Found;
    if (c.coloring) {
      report.line_witness = c.coloring;
      if (!verify_dynamic(inst.LB->graph, *c.coloring).ok()) report.consistent = false;
    }
  }

  std::vector<bool> known;
  for (const auto* answer : {&report.source_edge_3, &report.subdivided_dynamic_edge_3, &report.line_dynamic_3}) {
    if (answer->yes) known.push_back(*answer->yes);
  }
  if (std::adjacent_find(known.begin(), known.end(), std::not_equal_to<>()) != known.end()) report.consistent = false;
  return report;
}

}  // namespace dyncol
