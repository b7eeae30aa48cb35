#include <algorithm>
#include <deque>

#include "dyncol/classc.hpp"

namespace dyncol {

const char* to_string(StepKind kind) {
  switch (kind) {
    case StepKind::PendantPathStrip: return "pendant-path-strip";
    case StepKind::PendantTriangleStrip: return "pendant-triangle-strip";
    case StepKind::RedundantChainDelete: return "redundant-chain-delete";
    case StepKind::ChainContract: return "chain-contract";
    case StepKind::TriangleEliminate: return "triangle-eliminate";
    case StepKind::DiamondEliminate: return "diamond-eliminate";
    case StepKind::ClosedFormComponent: return "closed-form-component";
  }
  return "unknown";
}

std::vector<Vertex> removed_vertices(const ReductionStep& step) {
  struct Visitor {
    std::vector<Vertex> operator()(const PendantPathStrip& s) const { return s.path; }
    std::vector<Vertex> operator()(const PendantTriangleStrip& s) const { return {s.pair[0], s.pair[1]}; }
    std::vector<Vertex> operator()(const RedundantChainDelete& s) const { return s.interior; }
    std::vector<Vertex> operator()(const ChainContract& s) const { return s.interior; }
    std::vector<Vertex> operator()(const TriangleEliminate& s) const { return {s.apex, s.b, s.c}; }
    std::vector<Vertex> operator()(const DiamondEliminate& s) const {
      return {s.tips[0], s.tips[1], s.centers[0], s.centers[1]};
    }
    std::vector<Vertex> operator()(const ClosedFormComponent& s) const { return s.vertices; }
  };
  return std::visit(Visitor{}, step);
}

// Mutable graph with maximum degree 3 and tombstoned vertices.
struct Reducer::State {
  std::vector<std::array<Vertex, 3>> nbr;
  std::vector<std::uint8_t> deg;
  std::vector<char> alive;
  std::deque<Vertex> high, diamond, triangle;
  std::uint64_t work = 0;
  std::vector<ReductionStep> steps;

  explicit State(const Graph& g) {
    const auto n = g.vertex_count();
    if (g.max_degree() > 3) throw std::invalid_argument("reduction requires maximum degree at most 3");
    nbr.assign(n, {-1, -1, -1});
    deg.assign(n, 0);
    alive.assign(n, 1);
    for (std::size_t v = 0; v < n; ++v) {
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) nbr[v][deg[v]++] = w;
      if (deg[v] <= 2) high.push_back(static_cast<Vertex>(v));
      diamond.push_back(static_cast<Vertex>(v));
    }
  }

  std::span<const Vertex> neighbors(Vertex v) const { return {nbr[v].data(), deg[v]}; }

  bool adjacent(Vertex u, Vertex v) const {
    for (Vertex w : neighbors(u)) {
      if (w == v) return true;
    }
    return false;
  }

  // Neighbor of v other than x and y.
  Vertex third(Vertex v, Vertex x, Vertex y) const {
    for (Vertex w : neighbors(v)) {
      if (w != x && w != y) return w;
    }
    throw InternalInvariantError("vertex " + std::to_string(v) + " lacks a third neighbor");
  }

  void drop_half_edge(Vertex from, Vertex gone) {
    auto& row = nbr[from];
    for (int i = 0; i < deg[from]; ++i) {
      if (row[i] == gone) {
        row[i] = row[deg[from] - 1];
        row[--deg[from]] = -1;
        return;
      }
    }
  }

  // Deletes the vertices; surviving neighbors whose degree drops are queued.
  void remove(std::span<const Vertex> vertices) {
    for (Vertex v : vertices) alive[v] = 0;
    for (Vertex v : vertices) {
      ++work;
      for (Vertex w : neighbors(v)) {
        drop_half_edge(w, v);
        if (alive[w]) high.push_back(w);
      }
      deg[v] = 0;
      nbr[v] = {-1, -1, -1};
    }
  }

  void add_edge(Vertex u, Vertex v) {
    if (deg[u] >= 3 || deg[v] >= 3 || u == v || adjacent(u, v)) {
      throw InternalInvariantError("cannot add edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    nbr[u][deg[u]++] = v;
    nbr[v][deg[v]++] = u;
    for (Vertex x : {u, v}) {
      diamond.push_back(x);
      for (Vertex w : neighbors(x)) diamond.push_back(w);
    }
  }

  // Adding uv would close a K4: u and v share their two remaining,
  // adjacent neighbors.
  bool closes_k4(Vertex u, Vertex v) const {
    if (deg[u] != 2 || deg[v] != 2) return false;
    auto a = neighbors(u), b = neighbors(v);
    const bool same = (a[0] == b[0] && a[1] == b[1]) || (a[0] == b[1] && a[1] == b[0]);
    return same && adjacent(a[0], a[1]);
  }

  struct Run {
    std::deque<Vertex> members;
    std::optional<Vertex> ends[2];  // front side, back side
    bool cycle = false;
  };

  Run walk(Vertex v) {
    Run run;
    run.members.push_back(v);
    const auto start = neighbors(v);
    const std::array<Vertex, 2> first{start.size() > 0 ? start[0] : -1, start.size() > 1 ? start[1] : -1};
    for (int side = 0; side < 2; ++side) {
      if (first[side] < 0) continue;
      Vertex prev = v;
      Vertex cur = first[side];
      while (true) {
        ++work;
        if (cur == v) {
          run.cycle = true;
          return run;
        }
        if (deg[cur] == 3) {
          run.ends[side] = cur;
          break;
        }
        side == 0 ? run.members.push_front(cur) : run.members.push_back(cur);
        if (deg[cur] == 1) break;
        const auto nb = neighbors(cur);
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
    }
    return run;
  }

  // Rules for a vertex of degree at most 2. Triangle apexes are deferred to
  // the low-priority queue unless `allow_triangle`.
  std::optional<ReductionStep> low_rule(Vertex v, bool allow_triangle) {
    Run run = walk(v);
    std::vector<Vertex> members(run.members.begin(), run.members.end());
    // A cycle was walked backwards from v; restore forward order.
    if (run.cycle) std::reverse(members.begin(), members.end());
    if (run.cycle || (!run.ends[0] && !run.ends[1])) {
      remove(members);
      return ClosedFormComponent{run.cycle ? ClosedFormKind::Cycle : ClosedFormKind::Path, std::move(members)};
    }
    if (!run.ends[0] || !run.ends[1]) {
      const Vertex anchor = run.ends[0] ? *run.ends[0] : *run.ends[1];
      if (!run.ends[0]) std::reverse(members.begin(), members.end());
      remove(members);
      return PendantPathStrip{anchor, std::move(members)};
    }
    const Vertex a = *run.ends[0], b = *run.ends[1];
    if (a == b) {
      if (members.size() != 2) {
        throw InternalInvariantError("cycle of length " + std::to_string(members.size() + 1) +
                                     " through the single branch vertex " + std::to_string(a));
      }
      PendantTriangleStrip step{a, {std::min(members[0], members[1]), std::max(members[0], members[1])}};
      remove(members);
      return step;
    }
    if (adjacent(a, b)) {
      if (members.size() == 1) {
        if (allow_triangle) return triangle_rule(v);
        triangle.push_back(v);
        return std::nullopt;
      }
      remove(members);
      return RedundantChainDelete{a, b, std::move(members)};
    }
    if ((members.size() + 2) % 3 == 1) {
      throw InternalInvariantError("chain A_" + std::to_string(members.size() + 2) + " between " +
                                   std::to_string(a) + " and " + std::to_string(b) + " forces equal end colors");
    }
    remove(members);
    add_edge(a, b);
    return ChainContract{a, b, std::move(members)};
  }

  // `apex` has degree 2 and its neighbors are adjacent and of degree 3.
  std::optional<ReductionStep> triangle_rule(Vertex apex) {
    const auto nb = neighbors(apex);
    TriangleEliminate step;
    step.apex = apex;
    step.b = std::min(nb[0], nb[1]);
    step.c = std::max(nb[0], nb[1]);
    step.p = third(step.b, apex, step.c);
    step.q = third(step.c, apex, step.b);
    const bool joinable = step.p != step.q && !adjacent(step.p, step.q);
    const std::array<Vertex, 3> gone{apex, step.b, step.c};
    remove(gone);
    if (joinable && !closes_k4(step.p, step.q)) {
      add_edge(step.p, step.q);
      step.added = Edge{step.p, step.q};
    }
    return step;
  }

  // Diamond with centers x and some neighbor y, both tips of degree 3.
  std::optional<ReductionStep> diamond_rule(Vertex x) {
    if (!alive[x] || deg[x] != 3) return std::nullopt;
    for (Vertex y : neighbors(x)) {
      if (deg[y] != 3) continue;
      std::array<Vertex, 2> tips{};
      int common = 0;
      for (Vertex w : neighbors(x)) {
        if (w != y && adjacent(y, w)) {
          if (common < 2) tips[common] = w;
          ++common;
        }
      }
      if (common != 2 || adjacent(tips[0], tips[1])) continue;
      if (deg[tips[0]] != 3 || deg[tips[1]] != 3) continue;
      if (tips[0] > tips[1]) std::swap(tips[0], tips[1]);
      DiamondEliminate step;
      step.tips = tips;
      step.centers = {std::min(x, y), std::max(x, y)};
      step.u = third(tips[0], x, y);
      step.v = third(tips[1], x, y);
      if (step.u == step.v) {
        throw InternalInvariantError("diamond tips share the outside neighbor " + std::to_string(step.u));
      }
      const bool joinable = !adjacent(step.u, step.v);
      const std::array<Vertex, 4> gone{tips[0], tips[1], step.centers[0], step.centers[1]};
      remove(gone);
      if (joinable && !closes_k4(step.u, step.v)) {
        add_edge(step.u, step.v);
        step.added = Edge{step.u, step.v};
      }
      return step;
    }
    return std::nullopt;
  }

  std::optional<ReductionStep> next() {
    while (!high.empty()) {
      const Vertex v = high.front();
      high.pop_front();
      ++work;
      if (!alive[v] || deg[v] > 2) continue;
      if (auto step = low_rule(v, false)) return step;
    }
    while (!diamond.empty()) {
      const Vertex x = diamond.front();
      diamond.pop_front();
      ++work;
      if (auto step = diamond_rule(x)) return step;
    }
    while (!triangle.empty()) {
      const Vertex a = triangle.front();
      triangle.pop_front();
      ++work;
      if (!alive[a] || deg[a] > 2) continue;
      if (auto step = low_rule(a, true)) return step;
    }
    return std::nullopt;
  }

  InducedSubgraph snapshot() const {
    std::vector<Vertex> live;
    std::vector<Vertex> local(alive.size(), -1);
    for (std::size_t v = 0; v < alive.size(); ++v) {
      if (alive[v]) {
        local[v] = static_cast<Vertex>(live.size());
        live.push_back(static_cast<Vertex>(v));
      }
    }
    std::vector<Edge> edges;
    for (Vertex v : live) {
      for (Vertex w : neighbors(v)) {
        if (w > v) edges.push_back({local[v], local[w]});
      }
    }
    return {Graph::from_edges(live.size(), edges), std::move(live)};
  }
};

Reducer::Reducer(const Graph& g) : state_(std::make_unique<State>(g)) {}
Reducer::~Reducer() = default;
Reducer::Reducer(Reducer&&) noexcept = default;
Reducer& Reducer::operator=(Reducer&&) noexcept = default;

std::optional<ReductionStep> Reducer::step() {
  auto step = state_->next();
  if (step) state_->steps.push_back(*step);
  return step;
}

ReductionResult Reducer::finish() {
  while (step()) {
  }
  ReductionResult out;
  out.original_vertex_count = state_->alive.size();
  InducedSubgraph terminal = state_->snapshot();
  out.terminal = std::move(terminal.graph);
  out.terminal_to_original = std::move(terminal.to_parent);
  out.trace.steps = state_->steps;
  out.work = state_->work;
  return out;
}

InducedSubgraph Reducer::snapshot() const { return state_->snapshot(); }
std::uint64_t Reducer::work() const { return state_->work; }

ReductionResult reduce_to_T(const Graph& g) {
  const DecideVerdict verdict = decide_dyn3(g);
  if (!verdict.colorable) {
    throw std::invalid_argument(std::string("graph is not dynamically 3-colorable (") + to_string(verdict.reason) +
                                ")");
  }
  ReductionResult result = Reducer(g).finish();
  for (const auto& comp : connected_components(result.terminal)) {
    if (!recognize_T(induced_subgraph(result.terminal, comp).graph)) {
      throw InternalInvariantError("terminal component with " + std::to_string(comp.size()) +
                                   " vertices is not a triangle-and-matching graph");
    }
  }
  return result;
}

}  // namespace dyncol
