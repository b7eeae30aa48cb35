#include <algorithm>
#include <queue>

#include "dyncol/classc.hpp"

namespace dyncol {

std::optional<TriangleDecomposition> recognize_T(const Graph& g) {
  const auto n = g.vertex_count();
  if (n == 0) return std::nullopt;
  TriangleDecomposition d;
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<Vertex>(i);
    if (g.degree(v) != 3) return std::nullopt;
    const auto nb = g.neighbors(v);
    int found = 0;
    std::array<Vertex, 3> tri{};
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        if (g.adjacent(nb[a], nb[b])) {
          ++found;
          tri = {v, nb[a], nb[b]};
        }
      }
    }
    if (found != 1) return std::nullopt;
    std::sort(tri.begin(), tri.end());
    if (tri[0] == v) d.triangles.push_back(tri);
    for (Vertex w : nb) {
      if (w > v && std::find(tri.begin(), tri.end(), w) == tri.end()) d.matching.push_back({v, w});
    }
  }
  return d;
}

namespace {

struct TriangleIndex {
  std::vector<int> tri_of;   // vertex -> triangle
  std::vector<Vertex> mate;  // vertex -> matched vertex
};

TriangleIndex validate(const Graph& g, const TriangleDecomposition& d) {
  const auto n = g.vertex_count();
  auto fail = [](const std::string& what) { throw std::invalid_argument("invalid triangle decomposition: " + what); };
  if (d.triangles.size() * 3 != n || d.matching.size() * 2 != n) fail("sizes do not match the vertex count");
  if (g.edge_count() != d.triangles.size() * 3 + d.matching.size()) fail("graph has edges outside the decomposition");
  TriangleIndex idx{std::vector<int>(n, -1), std::vector<Vertex>(n, -1)};
  for (std::size_t t = 0; t < d.triangles.size(); ++t) {
    const auto& tri = d.triangles[t];
    for (int a = 0; a < 3; ++a) {
      const Vertex v = tri[a];
      if (v < 0 || static_cast<std::size_t>(v) >= n || idx.tri_of[v] >= 0) fail("triangles are not a partition");
      idx.tri_of[v] = static_cast<int>(t);
      if (!g.adjacent(v, tri[(a + 1) % 3])) fail("triangle edge missing");
    }
  }
  for (const Edge& e : d.matching) {
    if (!g.adjacent(e.u, e.v)) fail("matching edge missing");
    if (idx.mate[e.u] >= 0 || idx.mate[e.v] >= 0) fail("matching is not perfect");
    if (idx.tri_of[e.u] == idx.tri_of[e.v]) fail("matching edge inside a triangle");
    idx.mate[e.u] = e.v;
    idx.mate[e.v] = e.u;
  }
  return idx;
}

struct TreeArc {
  int to = 0;
  Edge via;  // via.u in the source triangle, via.v in `to`
};

}  // namespace

std::vector<Vertex> mis_T(const Graph& g, const TriangleDecomposition& d) {
  const TriangleIndex idx = validate(g, d);
  const int t = static_cast<int>(d.triangles.size());

  // Spanning tree of the triangle quotient, BFS from triangle 0.
  std::vector<std::vector<TreeArc>> tree(t);
  std::vector<char> seen(t, 0);
  std::queue<int> bfs;
  seen[0] = 1;
  bfs.push(0);
  int reached = 1;
  while (!bfs.empty()) {
    const int s = bfs.front();
    bfs.pop();
    for (Vertex x : d.triangles[s]) {
      const Vertex y = idx.mate[x];
      const int r = idx.tri_of[y];
      if (seen[r]) continue;
      seen[r] = 1;
      ++reached;
      tree[s].push_back({r, {x, y}});
      tree[r].push_back({s, {y, x}});
      bfs.push(r);
    }
  }
  if (reached != t) throw std::invalid_argument("mis_T requires a connected graph");

  int leaf = -1;
  for (int s = 0; s < t && leaf < 0; ++s) {
    if (tree[s].size() == 1) leaf = s;
  }
  const int root = tree[leaf].front().to;
  const bool drop_leaf = tree[root].size() == 3;

  std::vector<Vertex> chosen;
  std::vector<char> blocked(g.vertex_count(), 0);
  auto choose = [&](Vertex v) {
    chosen.push_back(v);
    blocked[v] = 1;
    for (Vertex w : g.neighbors(v)) blocked[w] = 1;
  };

  // Each non-root triangle takes the endpoint of its parent arc.
  std::fill(seen.begin(), seen.end(), 0);
  seen[root] = 1;
  if (drop_leaf) seen[leaf] = 1;
  bfs.push(root);
  while (!bfs.empty()) {
    const int s = bfs.front();
    bfs.pop();
    for (const TreeArc& arc : tree[s]) {
      if (seen[arc.to]) continue;
      seen[arc.to] = 1;
      choose(arc.via.v);
      bfs.push(arc.to);
    }
  }
  auto free_vertex = [&](int s) {
    std::array<Vertex, 3> tri = d.triangles[s];
    std::sort(tri.begin(), tri.end());
    for (Vertex v : tri) {
      if (!blocked[v]) return v;
    }
    throw InternalInvariantError("no free vertex left in triangle " + std::to_string(s));
  };
  choose(free_vertex(root));
  if (drop_leaf) choose(free_vertex(leaf));

  std::sort(chosen.begin(), chosen.end());
  for (Vertex v : chosen) {
    for (Vertex w : g.neighbors(v)) {
      if (std::binary_search(chosen.begin(), chosen.end(), w)) {
        throw InternalInvariantError("independent set contains the edge " + std::to_string(v) + "-" +
                                     std::to_string(w));
      }
    }
  }
  return chosen;
}

VertexColoring color_T(const Graph& g, const TriangleDecomposition& d) {
  const std::vector<Vertex> independent = mis_T(g, d);
  VertexColoring out{3, std::vector<int>(g.vertex_count(), 0)};
  for (Vertex v : independent) out.colors[v] = 3;
  std::vector<Vertex> rest;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (out.colors[v] == 0) rest.push_back(static_cast<Vertex>(v));
  }
  const InducedSubgraph sub = induced_subgraph(g, rest);
  const auto sides = two_coloring(sub.graph);
  if (!sides) throw InternalInvariantError("graph minus the independent set is not bipartite");
  for (std::size_t i = 0; i < rest.size(); ++i) out.colors[rest[i]] = sides->side[i] + 1;
  return out;
}

}  // namespace dyncol
