#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dyncol/colorcheck.hpp"
#include "dyncol/graph.hpp"
#include "dyncol/oracle.hpp"

namespace dyncol {

/// Subdivision gadget for the edge-coloring reduction.
///
/// Edge e of the cubic source (canonical order) becomes a path of B with
/// 3 * j[e] interior vertices. Source vertices keep their ids in B.
struct ReductionInstance {
  Graph source;
  std::vector<int> j;
  Graph B;
  /// Vertices of B along source edge e, from e.u to e.v inclusive.
  std::vector<std::vector<Vertex>> path_of_edge;
  /// Source edge that each edge of B (canonical order) lies on.
  std::vector<std::size_t> source_edge_of;
  /// Filled by clawfree_instance only.
  std::optional<LineGraph> LB;
};

/// `j` holds one positive entry per source edge, or a single entry for all.
/// Throws std::invalid_argument unless the source is 3-regular.
ReductionInstance subdivision_instance(const Graph& cubic, std::span<const int> j);
/// Same, plus the line graph of B.
ReductionInstance clawfree_instance(const Graph& cubic, std::span<const int> j);

struct EquivalenceAnswer {
  std::optional<bool> yes;  // nullopt when the budget ran out
  std::uint64_t nodes = 0;
};

struct EquivalenceReport {
  /// Source is 3-edge-colorable (chromatic number of its line graph <= 3).
  EquivalenceAnswer source_edge_3;
  std::optional<EdgeColoring> source_witness;
  /// B is dynamically 3-edge-colorable.
  EquivalenceAnswer subdivided_dynamic_edge_3;
  std::optional<EdgeColoring> subdivided_witness;
  /// L(B) is dynamically 3-colorable.
  EquivalenceAnswer line_dynamic_3;
  std::optional<VertexColoring> line_witness;

  /// All three answers known.
  bool complete() const;
  /// Known answers agree and every witness verifies.
  bool consistent = true;
};

EquivalenceReport equivalence_report(const Graph& cubic, std::span<const int> j, const SearchBudget& budget = {});

}  // namespace dyncol
