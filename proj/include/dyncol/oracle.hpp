#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dyncol/colorcheck.hpp"
#include "dyncol/graph.hpp"

namespace dyncol {

struct SearchBudget {
  std::size_t max_vertices = 256;
  std::uint64_t max_nodes = 200'000'000;
  double time_limit_seconds = 120.0;
};

enum class SearchStatus { Found, Infeasible, Unknown };

const char* to_string(SearchStatus status);

struct ColoringSearch {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<VertexColoring> coloring;
  std::uint64_t nodes = 0;
};

/// Exact search for a dynamic coloring with palette k.
///
/// Vertices of degree two never start a branch of their own: each maximal
/// degree-2 run is colored right after both of its ends, where the adjacency
/// and double-adjacency checks leave at most one color per interior vertex
/// once the first interior color is chosen (with k = 3).
ColoringSearch find_dynamic_k_coloring(const Graph& g, int k, const SearchBudget& budget = {});

/// Same search with the adjacency condition only.
ColoringSearch find_proper_k_coloring(const Graph& g, int k, const SearchBudget& budget = {});

/// Exact value or nullopt when the budget ran out.
struct ExactResult {
  std::optional<int> value;
  std::uint64_t nodes = 0;
  std::optional<VertexColoring> witness;

  bool known() const { return value.has_value(); }
};

ExactResult exact_dynamic_chromatic(const Graph& g, const SearchBudget& budget = {});
ExactResult exact_chromatic(const Graph& g, const SearchBudget& budget = {});
/// Witness colors the line graph, i.e. the edges in canonical order.
ExactResult exact_dynamic_edge_chromatic(const Graph& g, const SearchBudget& budget = {});

struct IndependenceResult {
  std::optional<int> value;
  std::vector<Vertex> witness;
  std::uint64_t nodes = 0;
};

IndependenceResult exact_independence(const Graph& g, const SearchBudget& budget = {});

}  // namespace dyncol
