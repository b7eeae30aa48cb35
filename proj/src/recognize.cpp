#include <algorithm>
#include <sstream>

#include "dyncol/classc.hpp"

namespace dyncol {

std::string describe(const Obstruction& obstruction) {
  std::ostringstream out;
  if (const auto* d = std::get_if<DegreeObstruction>(&obstruction)) {
    out << "vertex " << d->vertex << " has degree " << d->degree;
  } else if (const auto* c = std::get_if<Claw>(&obstruction)) {
    out << "claw centered at " << c->center << " with leaves " << c->leaves[0] << "," << c->leaves[1] << ","
        << c->leaves[2];
  } else {
    const auto& chain = std::get<ForbiddenChain>(obstruction).chain;
    out << "forbidden chain A_" << chain.order() << " between " << *chain.first_end << " and " << *chain.last_end;
  }
  return out.str();
}

MembershipVerdict recognize_C(const Graph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(static_cast<Vertex>(v));
    if (d > 3) return {false, DegreeObstruction{static_cast<Vertex>(v), d}};
  }
  if (auto claw = find_claw(g)) return {false, *claw};
  const ChainInventory inventory = chain_inventory(g);
  for (const Chain* chain : inventory.internal_chains()) {
    if (chain->order() % 3 == 1) return {false, ForbiddenChain{*chain}};
  }
  return {};
}

namespace {

void require_member(const Graph& g) {
  MembershipVerdict verdict = recognize_C(g);
  if (!verdict.member) throw NotInClassError(std::move(verdict));
}

// Structural test, assuming the class precondition holds.
std::optional<ExceptionalWitness> exceptional_unchecked(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<Vertex> branch;
  for (std::size_t v = 0; v < n; ++v) {
    const int d = g.degree(static_cast<Vertex>(v));
    if (d == 3) {
      branch.push_back(static_cast<Vertex>(v));
    } else if (d != 2) {
      return std::nullopt;
    }
  }
  if (branch.size() != 4) return std::nullopt;
  if (n == 4) return ExceptionalWitness{branch[0], branch[1], {}};

  const ChainInventory inv = chain_inventory(g);
  if (inv.chains.size() != 1) return std::nullopt;
  const Chain& chain = inv.chains.front();
  if (chain.kind != ChainKind::InternalChain || chain.members.size() != n - 4) return std::nullopt;
  const Vertex w = *chain.first_end, z = *chain.last_end;
  if (g.adjacent(w, z)) return std::nullopt;
  int direct = 0;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) direct += g.adjacent(branch[a], branch[b]) ? 1 : 0;
  }
  if (direct != 5) return std::nullopt;
  return ExceptionalWitness{w, z, chain.members};
}

ComponentVerdict decide_component(const Graph& sub, std::vector<Vertex> vertices) {
  ComponentVerdict out{std::move(vertices), true, DecideReason::PathComponent};
  const DegreeStats stats = degree_stats(sub);
  if (stats.max_degree <= 2) {
    if (stats.min_degree == 2) {
      out.reason = DecideReason::CycleResidue;
      out.colorable = sub.vertex_count() % 3 == 0;
    }
    return out;
  }
  if (stats.count_by_degree.contains(1)) {
    out.reason = DecideReason::DegreeOnePresent;
    return out;
  }
  const auto threes = stats.count_by_degree.find(3);
  if (threes == stats.count_by_degree.end() || threes->second != 4) {
    out.reason = DecideReason::Degree3CountNot4;
    return out;
  }
  if (exceptional_unchecked(sub)) {
    out.reason = DecideReason::ExceptionalE;
    out.colorable = false;
  } else {
    out.reason = DecideReason::MultipleChains;
  }
  return out;
}

}  // namespace

std::optional<ExceptionalWitness> is_exceptional(const Graph& g) {
  require_member(g);
  return exceptional_unchecked(g);
}

const char* to_string(DecideReason reason) {
  switch (reason) {
    case DecideReason::Empty: return "empty";
    case DecideReason::PathComponent: return "path-component";
    case DecideReason::CycleResidue: return "cycle-residue";
    case DecideReason::DegreeOnePresent: return "degree-1-present";
    case DecideReason::Degree3CountNot4: return "degree3-count-not-4";
    case DecideReason::MultipleChains: return "multiple-chains";
    case DecideReason::ExceptionalE: return "exceptional-E";
  }
  return "unknown";
}

DecideVerdict decide_dyn3(const Graph& g) {
  require_member(g);
  DecideVerdict verdict;
  for (auto& comp : connected_components(g)) {
    const InducedSubgraph sub = induced_subgraph(g, comp);
    verdict.components.push_back(decide_component(sub.graph, std::move(comp)));
  }
  if (verdict.components.empty()) return verdict;
  verdict.reason = verdict.components.front().reason;
  for (const ComponentVerdict& c : verdict.components) {
    if (!c.colorable) {
      verdict.colorable = false;
      verdict.reason = c.reason;
      break;
    }
  }
  return verdict;
}

}  // namespace dyncol
