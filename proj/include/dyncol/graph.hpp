#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dyncol {

using Vertex = std::int32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Edge with u <= v.
inline Edge canonical(Edge e) { return e.u <= e.v ? e : Edge{e.v, e.u}; }

class GraphError : public std::invalid_argument {
 public:
  GraphError(const std::string& what, std::optional<Edge> edge = std::nullopt)
      : std::invalid_argument(what), edge_(edge) {}
  const std::optional<Edge>& edge() const { return edge_; }

 private:
  std::optional<Edge> edge_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in compressed rows, each row sorted ascending. Edges
/// are indexed in canonical order: pairs (u, v) with u < v, sorted
/// lexicographically. Edge colorings and line graphs use that order.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on self-loops, duplicates or out-of-range ids.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  bool adjacent(Vertex u, Vertex v) const;
  int max_degree() const;

  std::vector<Edge> edges() const;
  /// Position of {u, v} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<std::size_t> first_edge_;  // edges() index of the first edge {v, w} with w > v
};

Graph build_graph(std::size_t n, std::span<const Edge> edges);

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  std::map<int, std::size_t> count_by_degree;
};

DegreeStats degree_stats(const Graph& g);

/// Components ordered by smallest vertex; vertices ascending within each.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local id -> parent id
};

/// `vertices` must be distinct; local ids follow their order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

struct Claw {
  Vertex center = 0;
  std::array<Vertex, 3> leaves{};
};

/// Induced K_{1,3}. Lowest center first, then lexicographically smallest leaves.
std::optional<Claw> find_claw(const Graph& g);

enum class ChainKind { InternalChain, PendantPath, PendantTriangle, PendantCycle, PureCycle, PurePath };

const char* to_string(ChainKind kind);

/// Maximal run of vertices of degree at most two.
///
/// `members` holds the run in walk order. For an internal chain members are
/// the interior of an A_i between `first_end` and `last_end`. For a pendant
/// path they run from the vertex next to the anchor (`first_end`) out to
/// the leaf. Loop runs (PendantTriangle, PendantCycle) have first_end ==
/// last_end. Pure components have no ends.
struct Chain {
  ChainKind kind = ChainKind::InternalChain;
  std::vector<Vertex> members;
  std::optional<Vertex> first_end;
  std::optional<Vertex> last_end;
  bool ends_adjacent = false;

  /// Vertex count of the A_i including both ends (internal chains only).
  int order() const { return static_cast<int>(members.size()) + 2; }
};

struct ChainInventory {
  std::vector<Chain> chains;

  std::vector<const Chain*> internal_chains() const;
};

/// Throws GraphError when the maximum degree exceeds 3.
ChainInventory chain_inventory(const Graph& g);

struct Bipartition {
  std::vector<std::uint8_t> side;
};

std::optional<Bipartition> two_coloring(const Graph& g);

/// Vertex-disjoint triangles (E1) plus the perfect matching joining them (E2).
struct TriangleDecomposition {
  std::vector<std::array<Vertex, 3>> triangles;
  std::vector<Edge> matching;
};

struct LineGraph {
  Graph graph;
  std::vector<Edge> edge_of_vertex;  // line vertex i <-> edge i of the source
};

LineGraph line_graph(const Graph& g);

/// Replaces edge i (canonical order) by a path with times[i] new interior
/// vertices. Original ids are kept; new ids are appended edge by edge.
Graph subdivide(const Graph& g, std::span<const int> times);
Graph subdivide(const Graph& g, int times);

}  // namespace dyncol
