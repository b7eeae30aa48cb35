#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dyncol/graph.hpp"

namespace dyncol {

/// Seeded generator with platform-independent sampling helpers.
///
/// std::mt19937_64 has a fully specified output sequence; the standard
/// distributions do not, so bounded draws and shuffles are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
  bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

Graph gen_cycle(int n);
Graph gen_path(int n);
Graph gen_complete(int n);

struct TriangleGraph {
  Graph graph;
  TriangleDecomposition decomposition;
};

/// Connected member of the triangle-and-matching class with t triangles
/// (t even, t >= 2). Vertex labels are shuffled.
TriangleGraph gen_T(int t, std::uint64_t seed);

/// K4 with the edge {0,1} replaced by a path on i vertices (i=2 gives K4).
Graph gen_E(int i);

/// k4, k33, prism, petersen, bridged-cubic-10.
Graph named_graph(std::string_view name);
std::vector<std::string> named_graph_names();

struct CorpusParams {
  int max_vertices = 14;
  int min_vertices = 1;
  /// Probability of planting a member of the exceptional K4 family.
  double exceptional_rate = 0.12;
  /// Probability of emitting a bare cycle or path.
  double closed_form_rate = 0.08;
};

struct CorpusInstance {
  Graph graph;
  std::string family;                // generator branch, for diagnostics
  std::optional<bool> colorable;     // ground truth when known by construction
};

/// Connected graphs in the claw-free, max-degree-3, A_{3j+1}-free class.
std::vector<CorpusInstance> gen_C_corpus(int count, const CorpusParams& params, std::uint64_t seed);
CorpusInstance gen_C_instance(const CorpusParams& params, Rng& rng);

}  // namespace dyncol
