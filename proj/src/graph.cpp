#include "dyncol/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace dyncol {

namespace {

std::string pair_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n ||
        static_cast<std::size_t>(e.v) >= n) {
      throw GraphError("vertex id out of range in edge " + pair_text(e), e);
    }
    if (e.u == e.v) throw GraphError("self-loop " + pair_text(e), e);
    canon.push_back(canonical(e));
  }
  std::vector<std::size_t> order(canon.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return canon[a] < canon[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (canon[order[i]] == canon[order[i - 1]]) {
      throw GraphError("duplicate edge " + pair_text(edges[order[i]]), edges[order[i]]);
    }
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : canon) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.targets_.resize(2 * canon.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : canon) {
    g.targets_[fill[e.u]++] = e.v;
    g.targets_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.targets_.begin() + g.offsets_[v], g.targets_.begin() + g.offsets_[v + 1]);
  }
  g.first_edge_.assign(n + 1, 0);
  for (const Edge& e : canon) ++g.first_edge_[e.u + 1];
  std::partial_sum(g.first_edge_.begin(), g.first_edge_.end(), g.first_edge_.begin());
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

int Graph::max_degree() const {
  int best = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(static_cast<Vertex>(u))) {
      if (v > static_cast<Vertex>(u)) out.push_back({static_cast<Vertex>(u), v});
    }
  }
  return out;
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  if (!adjacent(u, v)) return std::nullopt;
  auto row = neighbors(u);
  auto first = std::upper_bound(row.begin(), row.end(), u);
  return first_edge_[u] + static_cast<std::size_t>(std::lower_bound(first, row.end(), v) - first);
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

DegreeStats degree_stats(const Graph& g) {
  DegreeStats stats;
  const auto n = g.vertex_count();
  if (n == 0) return stats;
  stats.min_degree = g.degree(0);
  for (std::size_t v = 0; v < n; ++v) {
    const int d = g.degree(static_cast<Vertex>(v));
    stats.min_degree = std::min(stats.min_degree, d);
    stats.max_degree = std::max(stats.max_degree, d);
    ++stats.count_by_degree[d];
  }
  return stats;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      const Vertex j = local[w];
      if (j > static_cast<Vertex>(i)) edges.push_back({static_cast<Vertex>(i), j});
    }
  }
  return {Graph::from_edges(vertices.size(), edges), {vertices.begin(), vertices.end()}};
}

std::optional<Claw> find_claw(const Graph& g) {
  const auto n = g.vertex_count();
  for (std::size_t c = 0; c < n; ++c) {
    auto nb = g.neighbors(static_cast<Vertex>(c));
    const std::size_t d = nb.size();
    if (d < 3) continue;
    // Degree three is the common case; larger degrees fall back to all triples.
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = a + 1; b < d; ++b) {
        if (g.adjacent(nb[a], nb[b])) continue;
        for (std::size_t e = b + 1; e < d; ++e) {
          if (!g.adjacent(nb[a], nb[e]) && !g.adjacent(nb[b], nb[e])) {
            return Claw{static_cast<Vertex>(c), {nb[a], nb[b], nb[e]}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

const char* to_string(ChainKind kind) {
  switch (kind) {
    case ChainKind::InternalChain: return "internal-chain";
    case ChainKind::PendantPath: return "pendant-path";
    case ChainKind::PendantTriangle: return "pendant-triangle";
    case ChainKind::PendantCycle: return "pendant-cycle";
    case ChainKind::PureCycle: return "pure-cycle";
    case ChainKind::PurePath: return "pure-path";
  }
  return "unknown";
}

std::vector<const Chain*> ChainInventory::internal_chains() const {
  std::vector<const Chain*> out;
  for (const Chain& c : chains) {
    if (c.kind == ChainKind::InternalChain) out.push_back(&c);
  }
  return out;
}

namespace {

struct RunEnd {
  std::vector<Vertex> vertices;  // run vertices beyond the start, in walk order
  std::optional<Vertex> end;     // degree-3 vertex that stopped the walk
  bool closed = false;           // walk came back to the start
};

// Walks from `start` through `first` while vertices have degree 2.
RunEnd walk_run(const Graph& g, Vertex start, Vertex first) {
  RunEnd out;
  Vertex prev = start;
  Vertex cur = first;
  while (true) {
    if (cur == start) {
      out.closed = true;
      return out;
    }
    const int d = g.degree(cur);
    if (d == 3) {
      out.end = cur;
      return out;
    }
    out.vertices.push_back(cur);
    if (d == 1) return out;
    auto nb = g.neighbors(cur);
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
}

}  // namespace

ChainInventory chain_inventory(const Graph& g) {
  const auto n = g.vertex_count();
  if (g.max_degree() > 3) throw GraphError("chain inventory requires maximum degree at most 3");
  ChainInventory inv;
  std::vector<char> used(n, 0);

  auto record = [&](Chain chain) {
    for (Vertex v : chain.members) used[v] = 1;
    if (chain.first_end && chain.last_end) {
      chain.ends_adjacent = g.adjacent(*chain.first_end, *chain.last_end);
    }
    inv.chains.push_back(std::move(chain));
  };

  // Runs containing a degree-1 vertex are walked from that leaf first.
  for (std::size_t s = 0; s < n; ++s) {
    const auto v = static_cast<Vertex>(s);
    if (used[v] || g.degree(v) != 1) continue;
    RunEnd run = walk_run(g, v, g.neighbors(v)[0]);
    Chain chain;
    chain.members.push_back(v);
    chain.members.insert(chain.members.end(), run.vertices.begin(), run.vertices.end());
    if (run.end) {
      chain.kind = ChainKind::PendantPath;
      std::reverse(chain.members.begin(), chain.members.end());
      chain.first_end = run.end;
    } else {
      chain.kind = ChainKind::PurePath;
    }
    record(std::move(chain));
  }

  for (std::size_t s = 0; s < n; ++s) {
    const auto v = static_cast<Vertex>(s);
    if (used[v] || g.degree(v) != 2) continue;
    auto nb = g.neighbors(v);
    RunEnd right = walk_run(g, v, nb[1]);
    Chain chain;
    if (right.closed) {
      chain.kind = ChainKind::PureCycle;
      chain.members.push_back(v);
      chain.members.insert(chain.members.end(), right.vertices.begin(), right.vertices.end());
      record(std::move(chain));
      continue;
    }
    RunEnd left = walk_run(g, v, nb[0]);
    chain.members.assign(left.vertices.rbegin(), left.vertices.rend());
    chain.members.push_back(v);
    chain.members.insert(chain.members.end(), right.vertices.begin(), right.vertices.end());
    chain.first_end = left.end;
    chain.last_end = right.end;
    if (*left.end == *right.end) {
      chain.kind = chain.members.size() == 2 ? ChainKind::PendantTriangle : ChainKind::PendantCycle;
    } else {
      chain.kind = ChainKind::InternalChain;
    }
    record(std::move(chain));
  }
  return inv;
}

std::optional<Bipartition> two_coloring(const Graph& g) {
  const auto n = g.vertex_count();
  Bipartition part{std::vector<std::uint8_t>(n, 0)};
  std::vector<char> seen(n, 0);
  std::deque<Vertex> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    queue.push_back(static_cast<Vertex>(s));
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          part.side[w] = part.side[v] ^ 1U;
          queue.push_back(w);
        } else if (part.side[w] == part.side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return part;
}

LineGraph line_graph(const Graph& g) {
  LineGraph out;
  out.edge_of_vertex = g.edges();
  const auto n = g.vertex_count();
  // Incident edge ids per vertex.
  std::vector<std::vector<Vertex>> incident(n);
  for (std::size_t i = 0; i < out.edge_of_vertex.size(); ++i) {
    const Edge& e = out.edge_of_vertex[i];
    incident[e.u].push_back(static_cast<Vertex>(i));
    incident[e.v].push_back(static_cast<Vertex>(i));
  }
  std::vector<Edge> edges;
  for (const auto& ids : incident) {
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) edges.push_back({ids[a], ids[b]});
    }
  }
  out.graph = Graph::from_edges(out.edge_of_vertex.size(), edges);
  return out;
}

Graph subdivide(const Graph& g, std::span<const int> times) {
  const auto source = g.edges();
  if (times.size() != source.size()) {
    throw GraphError("subdivision counts must match the edge count (" + std::to_string(source.size()) + ")");
  }
  auto next = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (times[i] < 0) throw GraphError("negative subdivision count");
    Vertex prev = source[i].u;
    for (int k = 0; k < times[i]; ++k) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, source[i].v});
  }
  return Graph::from_edges(static_cast<std::size_t>(next), edges);
}

Graph subdivide(const Graph& g, int times) {
  std::vector<int> all(g.edge_count(), times);
  return subdivide(g, all);
}

}  // namespace dyncol
