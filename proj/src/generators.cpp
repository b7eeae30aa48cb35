#include "dyncol/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dyncol {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  // Rejection keeps the draw unbiased and reproducible.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph gen_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph gen_complete(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

TriangleGraph gen_T(int t, std::uint64_t seed) {
  if (t < 2 || t % 2 != 0) throw std::invalid_argument("gen_T needs an even triangle count t >= 2");
  Rng rng(seed);
  const int n = 3 * t;
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  rng.shuffle(label);

  // Triangle k owns raw vertices 3k..3k+2. A random ring through all
  // triangles keeps the graph connected; the leftover ports are matched at
  // random.
  std::vector<int> order(static_cast<std::size_t>(t));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<std::array<int, 3>> roles(static_cast<std::size_t>(t));  // in, out, free
  for (auto& r : roles) {
    r = {0, 1, 2};
    for (int i = 2; i > 0; --i) std::swap(r[i], r[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  }
  auto port = [&](int tri, int role) { return label[3 * tri + roles[tri][role]]; };

  TriangleGraph out;
  std::vector<Edge> edges;
  for (int k = 0; k < t; ++k) {
    const Vertex a = label[3 * k], b = label[3 * k + 1], c = label[3 * k + 2];
    out.decomposition.triangles.push_back({std::min({a, b, c}), a + b + c - std::min({a, b, c}) - std::max({a, b, c}),
                                           std::max({a, b, c})});
    edges.push_back({a, b});
    edges.push_back({b, c});
    edges.push_back({a, c});
  }
  for (int k = 0; k < t; ++k) {
    out.decomposition.matching.push_back(canonical({port(order[k], 1), port(order[(k + 1) % t], 0)}));
  }
  std::vector<Vertex> free_ports;
  for (int k = 0; k < t; ++k) free_ports.push_back(port(k, 2));
  rng.shuffle(free_ports);
  for (std::size_t i = 0; i + 1 < free_ports.size(); i += 2) {
    out.decomposition.matching.push_back(canonical({free_ports[i], free_ports[i + 1]}));
  }
  edges.insert(edges.end(), out.decomposition.matching.begin(), out.decomposition.matching.end());
  std::sort(out.decomposition.triangles.begin(), out.decomposition.triangles.end());
  std::sort(out.decomposition.matching.begin(), out.decomposition.matching.end());
  out.graph = Graph::from_edges(static_cast<std::size_t>(n), edges);
  return out;
}

Graph gen_E(int i) {
  if (i < 2 || i % 3 == 1) throw std::invalid_argument("gen_E needs i >= 2 with i mod 3 in {0, 2}");
  std::vector<Edge> edges{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  Vertex prev = 0;
  Vertex next = 4;
  for (int k = 0; k < i - 2; ++k) {
    edges.push_back({prev, next});
    prev = next++;
  }
  edges.push_back({prev, 1});
  return Graph::from_edges(static_cast<std::size_t>(next), edges);
}

std::vector<std::string> named_graph_names() { return {"k4", "k33", "prism", "petersen", "bridged-cubic-10"}; }

Graph named_graph(std::string_view name) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  if (name == "k4") {
    return gen_complete(4);
  } else if (name == "k33") {
    n = 6;
    for (Vertex a = 0; a < 3; ++a) {
      for (Vertex b = 3; b < 6; ++b) edges.push_back({a, b});
    }
  } else if (name == "prism") {
    n = 6;
    edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
  } else if (name == "petersen") {
    n = 10;
    for (Vertex k = 0; k < 5; ++k) {
      edges.push_back({k, (k + 1) % 5});
      edges.push_back({k, k + 5});
      edges.push_back({k + 5, (k + 2) % 5 + 5});
    }
  } else if (name == "bridged-cubic-10") {
    // Two copies of K4 with one edge subdivided once; the subdivision
    // vertices 4 and 9 are joined by a bridge.
    n = 10;
    for (Vertex base : {0, 5}) {
      const std::vector<Edge> block{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}};
      for (const Edge& e : block) edges.push_back({base + e.u, base + e.v});
    }
    edges.push_back({4, 9});
  } else {
    throw std::invalid_argument("unknown named graph '" + std::string(name) + "'");
  }
  return Graph::from_edges(n, edges);
}

namespace {

// Lengths s with s mod 3 != 2, the interior sizes of allowed chains.
int allowed_length(Rng& rng, int lo, int budget) {
  std::vector<int> options;
  for (int s = lo; s <= std::min(budget, 7); ++s) {
    if (s % 3 != 2) options.push_back(s);
  }
  if (options.empty()) return -1;
  return options[rng.below(options.size())];
}

// Assembles graphs from triangles whose vertices ("ports") each receive one
// gadget: a link to another port, or an end decoration.
class PortBuilder {
 public:
  PortBuilder(Rng& rng, int budget) : rng_(rng), budget_(budget) {}

  Vertex add_vertex() {
    --budget_;
    return next_++;
  }
  void add_edge(Vertex a, Vertex b) { edges_.push_back({a, b}); }
  int budget() const { return budget_; }

  // Path x - s interior vertices - returns the last vertex before the target.
  Vertex chain_from(Vertex x, int s) {
    Vertex prev = x;
    for (int k = 0; k < s; ++k) {
      const Vertex v = add_vertex();
      add_edge(prev, v);
      prev = v;
    }
    return prev;
  }

  std::array<Vertex, 3> add_triangle() {
    std::array<Vertex, 3> t{add_vertex(), add_vertex(), add_vertex()};
    add_edge(t[0], t[1]);
    add_edge(t[1], t[2]);
    add_edge(t[0], t[2]);
    return t;
  }

  void link(Vertex x, Vertex y, bool same_triangle) {
    const int roll = static_cast<int>(rng_.below(10));
    if (roll < 2 && budget_ >= 4) {
      // x - chain - tip, diamond, tip - chain - y
      const int s1 = allowed_length(rng_, 0, (budget_ - 4) / 2);
      const int s2 = allowed_length(rng_, 0, budget_ - 4 - s1);
      const Vertex a_side = chain_from(x, s1);
      const Vertex a = add_vertex(), c = add_vertex(), d = add_vertex(), b = add_vertex();
      add_edge(a_side, a);
      add_edge(a, c);
      add_edge(a, d);
      add_edge(c, d);
      add_edge(b, c);
      add_edge(b, d);
      add_edge(chain_from(b, s2), y);
      ++diamonds_;
      return;
    }
    if ((same_triangle || roll < 6) && budget_ >= 1) {
      const int s = allowed_length(rng_, 1, budget_);
      if (s > 0) {
        add_edge(chain_from(x, s), y);
        return;
      }
    }
    if (same_triangle) throw std::logic_error("same-triangle link needs a gadget");
    add_edge(x, y);
  }

  void decorate(Vertex x) {
    const int roll = static_cast<int>(rng_.below(10));
    if (roll < 3 && budget_ >= 1) {
      const int len = rng_.between(1, std::min(budget_, 5));
      chain_from(x, len);
    } else if (roll < 5 && budget_ >= 3) {
      const int s = allowed_length(rng_, 0, budget_ - 3);
      const Vertex r_side = chain_from(x, s);
      const Vertex r = add_vertex(), a = add_vertex(), b = add_vertex();
      add_edge(r_side, r);
      add_edge(r, a);
      add_edge(r, b);
      add_edge(a, b);
    }
    // Otherwise x stays the degree-2 apex of its triangle.
  }

  Graph finish(bool relabel) {
    const auto n = static_cast<std::size_t>(next_);
    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), 0);
    if (relabel) rng_.shuffle(label);
    for (Edge& e : edges_) e = {label[e.u], label[e.v]};
    return Graph::from_edges(n, edges_);
  }

  int diamonds() const { return diamonds_; }

 private:
  Rng& rng_;
  int budget_;
  Vertex next_ = 0;
  std::vector<Edge> edges_;
  int diamonds_ = 0;
};

CorpusInstance port_instance(const CorpusParams& params, Rng& rng) {
  const int max_k = std::max(1, params.max_vertices / 3);
  // Favor few triangles so that gadgets get budget too.
  const int k = std::min(max_k, rng.between(1, std::max(1, (params.max_vertices + 3) / 4)));
  PortBuilder b(rng, params.max_vertices);
  std::vector<std::array<Vertex, 3>> tris;
  for (int i = 0; i < k; ++i) tris.push_back(b.add_triangle());

  std::vector<std::vector<Vertex>> free(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) free[i] = {tris[i].begin(), tris[i].end()};
  for (auto& f : free) rng.shuffle(f);
  auto take = [&](int tri) {
    Vertex v = free[tri].back();
    free[tri].pop_back();
    return v;
  };

  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  const bool ring = k >= 2 && rng.chance(0.5);
  for (int i = 0; i + 1 < k; ++i) b.link(take(order[i]), take(order[i + 1]), false);
  if (ring) b.link(take(order[k - 1]), take(order[0]), false);

  std::vector<std::pair<Vertex, int>> ports;
  for (int i = 0; i < k; ++i) {
    for (Vertex v : free[i]) ports.push_back({v, i});
  }
  rng.shuffle(ports);
  std::vector<char> done(ports.size(), 0);
  for (std::size_t i = 0; i < ports.size(); ++i) {
    if (done[i]) continue;
    done[i] = 1;
    bool paired = false;
    if (rng.chance(0.45)) {
      for (std::size_t j = i + 1; j < ports.size() && !paired; ++j) {
        if (done[j]) continue;
        const bool same = ports[i].second == ports[j].second;
        if (same && b.budget() < 1) continue;
        done[j] = 1;
        b.link(ports[i].first, ports[j].first, same);
        paired = true;
      }
    }
    if (!paired) b.decorate(ports[i].first);
  }
  CorpusInstance inst{b.finish(true), "ports", std::nullopt};
  inst.family = "ports-k" + std::to_string(k) + (b.diamonds() > 0 ? "-diamond" : "");
  return inst;
}

}  // namespace

CorpusInstance gen_C_instance(const CorpusParams& params, Rng& rng) {
  if (params.max_vertices < 3) throw std::invalid_argument("corpus needs max_vertices >= 3");
  while (true) {
    const double roll = static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
    CorpusInstance inst;
    if (roll < params.exceptional_rate && params.max_vertices >= 4) {
      std::vector<int> options;
      for (int i = 2; 4 + (i - 2) <= params.max_vertices && i <= 40; ++i) {
        if (i % 3 != 1) options.push_back(i);
      }
      const int i = options[rng.below(options.size())];
      inst = {gen_E(i), "exceptional-i" + std::to_string(i), false};
    } else if (roll < params.exceptional_rate + params.closed_form_rate) {
      if (rng.chance(0.6)) {
        const int n = rng.between(3, std::min(params.max_vertices, 60));
        inst = {gen_cycle(n), "cycle-" + std::to_string(n), n % 3 == 0};
      } else {
        const int n = rng.between(1, std::min(params.max_vertices, 60));
        inst = {gen_path(n), "path-" + std::to_string(n), true};
      }
    } else {
      inst = port_instance(params, rng);
    }
    if (static_cast<int>(inst.graph.vertex_count()) >= params.min_vertices) return inst;
  }
}

std::vector<CorpusInstance> gen_C_corpus(int count, const CorpusParams& params, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CorpusInstance> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) out.push_back(gen_C_instance(params, rng));
  return out;
}

}  // namespace dyncol
