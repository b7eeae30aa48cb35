#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dyncol/colorcheck.hpp"
#include "dyncol/graph.hpp"

namespace dyncol {

// ---------------------------------------------------------------------------
// Recognition

struct DegreeObstruction {
  Vertex vertex = 0;
  int degree = 0;
};

struct ForbiddenChain {
  Chain chain;  // internal chain whose order i satisfies i % 3 == 1
};

using Obstruction = std::variant<DegreeObstruction, Claw, ForbiddenChain>;

struct MembershipVerdict {
  bool member = true;
  std::optional<Obstruction> obstruction;
};

std::string describe(const Obstruction& obstruction);

/// Membership in the class of graphs with maximum degree 3 that are
/// claw-free and contain no A_i with i = 1 (mod 3), i >= 4. Linear time.
MembershipVerdict recognize_C(const Graph& g);

class NotInClassError : public std::invalid_argument {
 public:
  explicit NotInClassError(MembershipVerdict verdict)
      : std::invalid_argument("graph is not in the class: " + describe(*verdict.obstruction)),
        verdict_(std::move(verdict)) {}
  const MembershipVerdict& verdict() const { return verdict_; }

 private:
  MembershipVerdict verdict_;
};

/// Raised when a step that cannot fail on valid input does fail.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Exceptional family: K4 with one edge replaced by a path.

struct ExceptionalWitness {
  Vertex w = 0;                  // ends of the replaced edge
  Vertex z = 0;
  std::vector<Vertex> interior;  // path interior from w to z; empty for K4
  int order() const { return static_cast<int>(interior.size()) + 2; }
};

/// Connected graph in the class required; throws NotInClassError otherwise.
std::optional<ExceptionalWitness> is_exceptional(const Graph& g);

// ---------------------------------------------------------------------------
// Decision

enum class DecideReason {
  Empty,
  PathComponent,
  CycleResidue,
  DegreeOnePresent,
  Degree3CountNot4,
  MultipleChains,
  ExceptionalE,
};

const char* to_string(DecideReason reason);

struct ComponentVerdict {
  std::vector<Vertex> vertices;
  bool colorable = true;
  DecideReason reason = DecideReason::Empty;
};

struct DecideVerdict {
  bool colorable = true;
  /// First non-colorable component's reason, else the first component's.
  DecideReason reason = DecideReason::Empty;
  std::vector<ComponentVerdict> components;
};

/// Dynamic 3-colorability for graphs in the class, per component. Throws
/// NotInClassError outside the class.
DecideVerdict decide_dyn3(const Graph& g);

// ---------------------------------------------------------------------------
// Reduction

/// Leaf-ward path hanging off a degree-3 anchor; path[0] is next to the anchor.
struct PendantPathStrip {
  Vertex anchor = 0;
  std::vector<Vertex> path;
};

struct PendantTriangleStrip {
  Vertex anchor = 0;
  std::array<Vertex, 2> pair{};
};

/// Chain whose ends are already adjacent; removed without a replacement edge.
struct RedundantChainDelete {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> interior;  // from u to v
};

struct ChainContract {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> interior;  // from u to v
};

/// Triangle {apex, b, c} with apex of degree 2, b adjacent to p, c to q.
/// `added` is {p, q} when the edge was inserted.
struct TriangleEliminate {
  Vertex apex = 0;
  Vertex b = 0;
  Vertex c = 0;
  Vertex p = 0;
  Vertex q = 0;
  std::optional<Edge> added;
};

/// K4 minus the edge tips[0]tips[1]; tips[0] is adjacent to u, tips[1] to v.
struct DiamondEliminate {
  std::array<Vertex, 2> tips{};
  std::array<Vertex, 2> centers{};
  Vertex u = 0;
  Vertex v = 0;
  std::optional<Edge> added;
};

enum class ClosedFormKind { Path, Cycle };

/// Whole component that is a path or a cycle, in walk order.
struct ClosedFormComponent {
  ClosedFormKind kind = ClosedFormKind::Path;
  std::vector<Vertex> vertices;
};

using ReductionStep = std::variant<PendantPathStrip, PendantTriangleStrip, RedundantChainDelete, ChainContract,
                                   TriangleEliminate, DiamondEliminate, ClosedFormComponent>;

enum class StepKind {
  PendantPathStrip,
  PendantTriangleStrip,
  RedundantChainDelete,
  ChainContract,
  TriangleEliminate,
  DiamondEliminate,
  ClosedFormComponent,
};

inline StepKind kind_of(const ReductionStep& step) { return static_cast<StepKind>(step.index()); }
const char* to_string(StepKind kind);
/// Vertices the step deletes, in a fixed order.
std::vector<Vertex> removed_vertices(const ReductionStep& step);

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

struct ReductionResult {
  std::size_t original_vertex_count = 0;
  Graph terminal;
  std::vector<Vertex> terminal_to_original;
  ReductionTrace trace;
  /// Queue pops plus vertices walked or deleted; linear in n.
  std::uint64_t work = 0;
};

/// Rewrites a graph of the class step by step. Rules, by priority:
/// pendant strips, chain delete/contract and closed-form components first,
/// then diamonds, then triangles with one degree-2 vertex. The fixpoint has
/// only 3-regular, diamond-free components.
///
/// step() can be driven one rule at a time; snapshot() shows the current
/// graph. No precondition beyond maximum degree 3 is enforced here.
class Reducer {
 public:
  explicit Reducer(const Graph& g);
  ~Reducer();
  Reducer(Reducer&&) noexcept;
  Reducer& operator=(Reducer&&) noexcept;

  /// Applies one rule; nullopt at the fixpoint.
  std::optional<ReductionStep> step();
  /// Runs to the fixpoint.
  ReductionResult finish();

  /// Current graph restricted to live vertices, with the id map.
  InducedSubgraph snapshot() const;
  std::uint64_t work() const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

/// Requires membership and a colorable verdict; throws NotInClassError or
/// std::invalid_argument otherwise. Every terminal component is checked to
/// be a triangle-and-matching graph.
ReductionResult reduce_to_T(const Graph& g);

// ---------------------------------------------------------------------------
// Triangle-and-matching graphs

/// Decomposition iff g is 3-regular, every vertex lies in exactly one triangle.
std::optional<TriangleDecomposition> recognize_T(const Graph& g);

/// Maximum independent set with one vertex per triangle, for a connected
/// graph with a valid decomposition (spanning tree of the triangle quotient).
std::vector<Vertex> mis_T(const Graph& g, const TriangleDecomposition& d);

/// Independent set gets color 3, the bipartite rest colors 1 and 2.
VertexColoring color_T(const Graph& g, const TriangleDecomposition& d);

// ---------------------------------------------------------------------------
// End to end

/// Recolors every removed vertex, replaying the trace backwards.
/// `terminal_coloring` colors result.terminal.
VertexColoring back_extend(const ReductionResult& result, const VertexColoring& terminal_coloring);

struct ColoringOutcome {
  std::optional<VertexColoring> coloring;
  DecideVerdict verdict;
  std::optional<ReductionResult> reduction;
};

/// Full pipeline: decide, reduce, color the terminal, extend back, verify.
ColoringOutcome dynamic_3_color_detailed(const Graph& g);
std::optional<VertexColoring> dynamic_3_color(const Graph& g);

}  // namespace dyncol
