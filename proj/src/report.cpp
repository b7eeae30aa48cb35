#include "dyncol/report.hpp"

namespace dyncol::report {

Json graph_summary(const Graph& g) {
  const DegreeStats stats = degree_stats(g);
  Json by_degree = Json::object();
  for (const auto& [d, count] : stats.count_by_degree) by_degree[std::to_string(d)] = count;
  return {{"n", g.vertex_count()},
          {"m", g.edge_count()},
          {"min_degree", stats.min_degree},
          {"max_degree", stats.max_degree},
          {"degree_counts", by_degree}};
}

Json membership(const MembershipVerdict& verdict) {
  Json out{{"member", verdict.member}};
  if (!verdict.obstruction) return out;
  Json obs;
  if (const auto* d = std::get_if<DegreeObstruction>(&*verdict.obstruction)) {
    obs = {{"kind", "degree"}, {"vertex", d->vertex}, {"degree", d->degree}};
  } else if (const auto* c = std::get_if<Claw>(&*verdict.obstruction)) {
    obs = {{"kind", "claw"}, {"center", c->center}, {"leaves", c->leaves}};
  } else {
    const Chain& chain = std::get<ForbiddenChain>(*verdict.obstruction).chain;
    obs = {{"kind", "forbidden-chain"},
           {"order", chain.order()},
           {"ends", {*chain.first_end, *chain.last_end}},
           {"interior", chain.members}};
  }
  obs["description"] = describe(*verdict.obstruction);
  out["obstruction"] = obs;
  return out;
}

Json decision(const DecideVerdict& verdict) {
  Json comps = Json::array();
  for (const auto& c : verdict.components) {
    comps.push_back({{"size", c.vertices.size()},
                     {"smallest_vertex", c.vertices.empty() ? -1 : c.vertices.front()},
                     {"colorable", c.colorable},
                     {"reason", to_string(c.reason)}});
  }
  return {{"colorable", verdict.colorable}, {"reason", to_string(verdict.reason)}, {"components", comps}};
}

Json violations(const ViolationReport& rep) {
  Json list = Json::array();
  for (const auto& v : rep.violations) {
    list.push_back({{"kind", to_string(v.kind)}, {"site", v.site}, {"colors_seen", v.colors_seen}});
  }
  return {{"ok", rep.ok()},
          {"adjacency", rep.count(ViolationKind::Adjacency)},
          {"double_adjacency", rep.count(ViolationKind::DoubleAdjacency)},
          {"violations", list}};
}

namespace {

Json edge_or_null(const std::optional<Edge>& e) {
  if (!e) return nullptr;
  return Json::array({e->u, e->v});
}

struct StepAnchors {
  Json operator()(const PendantPathStrip& s) const { return {s.anchor}; }
  Json operator()(const PendantTriangleStrip& s) const { return {s.anchor}; }
  Json operator()(const RedundantChainDelete& s) const { return {s.u, s.v}; }
  Json operator()(const ChainContract& s) const { return {s.u, s.v}; }
  Json operator()(const TriangleEliminate& s) const { return {s.p, s.q}; }
  Json operator()(const DiamondEliminate& s) const { return {s.u, s.v}; }
  Json operator()(const ClosedFormComponent&) const { return Json::array(); }
};

}  // namespace

Json step(const ReductionStep& s) {
  Json out{{"kind", to_string(kind_of(s))}, {"removed", removed_vertices(s)}, {"anchors", std::visit(StepAnchors{}, s)}};
  std::optional<Edge> added;
  if (const auto* c = std::get_if<ChainContract>(&s)) added = Edge{c->u, c->v};
  if (const auto* t = std::get_if<TriangleEliminate>(&s)) added = t->added;
  if (const auto* d = std::get_if<DiamondEliminate>(&s)) added = d->added;
  out["added_edge"] = edge_or_null(added);
  if (const auto* cf = std::get_if<ClosedFormComponent>(&s)) {
    out["shape"] = cf->kind == ClosedFormKind::Cycle ? "cycle" : "path";
  }
  return out;
}

Json reduction(const ReductionResult& result) {
  Json steps = Json::array();
  for (const auto& s : result.trace.steps) steps.push_back(step(s));
  return {{"original_vertices", result.original_vertex_count},
          {"steps", steps},
          {"terminal_vertices", result.terminal_to_original},
          {"terminal_edges", result.terminal.edge_count()},
          {"work", result.work}};
}

Json equivalence(const EquivalenceReport& rep) {
  auto answer = [](const EquivalenceAnswer& a) {
    return Json{{"answer", a.yes ? Json(*a.yes) : Json(nullptr)}, {"nodes", a.nodes}};
  };
  Json out{{"source_3_edge_colorable", answer(rep.source_edge_3)},
           {"subdivided_dynamic_3_edge_colorable", answer(rep.subdivided_dynamic_edge_3)},
           {"line_graph_dynamic_3_colorable", answer(rep.line_dynamic_3)},
           {"complete", rep.complete()},
           {"consistent", rep.consistent}};
  if (rep.source_witness) out["source_3_edge_colorable"]["witness"] = rep.source_witness->colors;
  if (rep.subdivided_witness) out["subdivided_dynamic_3_edge_colorable"]["witness"] = rep.subdivided_witness->colors;
  if (rep.line_witness) out["line_graph_dynamic_3_colorable"]["witness"] = rep.line_witness->colors;
  return out;
}

Json coloring(const VertexColoring& c) { return {{"k", c.k}, {"colors", c.colors}}; }

}  // namespace dyncol::report
