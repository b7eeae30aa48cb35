#include <algorithm>

#include "dyncol/classc.hpp"

namespace dyncol {

namespace {

int lowest_except(std::initializer_list<int> taken) {
  for (int c = 1; c <= 3; ++c) {
    if (std::find(taken.begin(), taken.end(), c) == taken.end()) return c;
  }
  throw InternalInvariantError("no free color");
}

class Extender {
 public:
  explicit Extender(std::vector<int>& colors) : colors_(colors) {}

  int at(Vertex v) const {
    if (colors_[v] == 0) throw InternalInvariantError("vertex " + std::to_string(v) + " is not yet colored");
    return colors_[v];
  }

  void operator()(const ClosedFormComponent& s) {
    if (s.kind == ClosedFormKind::Cycle && s.vertices.size() % 3 != 0) {
      throw InternalInvariantError("cycle of length " + std::to_string(s.vertices.size()) + " reached the coloring");
    }
    for (std::size_t j = 0; j < s.vertices.size(); ++j) colors_[s.vertices[j]] = static_cast<int>(j % 3) + 1;
  }

  void operator()(const PendantPathStrip& s) {
    int before = at(s.anchor);
    int last = lowest_except({before});
    for (Vertex v : s.path) {
      colors_[v] = last;
      const int next = 6 - last - before;
      before = last;
      last = next;
    }
  }

  void operator()(const PendantTriangleStrip& s) {
    const int a = at(s.anchor);
    const int low = lowest_except({a});
    colors_[s.pair[0]] = low;
    colors_[s.pair[1]] = 6 - a - low;
  }

  void chain(Vertex u, Vertex v, const std::vector<Vertex>& interior) {
    const auto seq = chain_transfer(static_cast<int>(interior.size()) + 2, at(u), at(v));
    if (!seq) throw InternalInvariantError("chain between " + std::to_string(u) + " and " + std::to_string(v) +
                                           " admits no coloring");
    for (std::size_t j = 0; j < interior.size(); ++j) colors_[interior[j]] = (*seq)[j + 1];
  }

  void operator()(const RedundantChainDelete& s) { chain(s.u, s.v, s.interior); }
  void operator()(const ChainContract& s) { chain(s.u, s.v, s.interior); }

  void operator()(const TriangleEliminate& s) {
    const int cb = lowest_except({at(s.p)});
    const int cc = lowest_except({at(s.q), cb});
    colors_[s.b] = cb;
    colors_[s.c] = cc;
    colors_[s.apex] = 6 - cb - cc;
  }

  void operator()(const DiamondEliminate& s) {
    const int tip = lowest_except({at(s.u), at(s.v)});
    const int low = lowest_except({tip});
    colors_[s.tips[0]] = tip;
    colors_[s.tips[1]] = tip;
    colors_[s.centers[0]] = low;
    colors_[s.centers[1]] = 6 - tip - low;
  }

 private:
  std::vector<int>& colors_;
};

}  // namespace

VertexColoring back_extend(const ReductionResult& result, const VertexColoring& terminal_coloring) {
  if (terminal_coloring.colors.size() != result.terminal_to_original.size()) {
    throw ColoringError("terminal coloring has " + std::to_string(terminal_coloring.colors.size()) +
                        " entries, expected " + std::to_string(result.terminal_to_original.size()));
  }
  VertexColoring out{3, std::vector<int>(result.original_vertex_count, 0)};
  for (std::size_t i = 0; i < terminal_coloring.colors.size(); ++i) {
    const int c = terminal_coloring.colors[i];
    if (c < 1 || c > 3) throw ColoringError("terminal color out of range at vertex " + std::to_string(i));
    out.colors[result.terminal_to_original[i]] = c;
  }
  Extender extend(out.colors);
  for (auto it = result.trace.steps.rbegin(); it != result.trace.steps.rend(); ++it) std::visit(extend, *it);
  for (std::size_t v = 0; v < out.colors.size(); ++v) {
    if (out.colors[v] == 0) throw InternalInvariantError("vertex " + std::to_string(v) + " left uncolored");
  }
  return out;
}

ColoringOutcome dynamic_3_color_detailed(const Graph& g) {
  ColoringOutcome out;
  out.verdict = decide_dyn3(g);
  if (!out.verdict.colorable) return out;
  ReductionResult red = Reducer(g).finish();

  VertexColoring terminal{3, std::vector<int>(red.terminal.vertex_count(), 0)};
  for (const auto& comp : connected_components(red.terminal)) {
    const InducedSubgraph sub = induced_subgraph(red.terminal, comp);
    const auto decomposition = recognize_T(sub.graph);
    if (!decomposition) {
      throw InternalInvariantError("terminal component with " + std::to_string(comp.size()) +
                                   " vertices is not a triangle-and-matching graph");
    }
    const VertexColoring local = color_T(sub.graph, *decomposition);
    for (std::size_t i = 0; i < comp.size(); ++i) terminal.colors[comp[i]] = local.colors[i];
  }

  VertexColoring coloring = back_extend(red, terminal);
  const ViolationReport report = verify_dynamic(g, coloring);
  if (!report.ok()) {
    throw InternalInvariantError("produced coloring fails verification with " +
                                 std::to_string(report.violations.size()) + " violations");
  }
  out.coloring = std::move(coloring);
  out.reduction = std::move(red);
  return out;
}

std::optional<VertexColoring> dynamic_3_color(const Graph& g) { return dynamic_3_color_detailed(g).coloring; }

}  // namespace dyncol
