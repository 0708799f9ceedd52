#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "mis/graph.hpp"

namespace mis {

struct RemovedUnconfined {
  Vertex v;
};
struct RemovedIsolated {
  Vertex v;
};
/// N[A] contracted into `contracted` (N(A) was independent).
struct FoldedIndependent {
  std::vector<Vertex> a;
  std::vector<Vertex> na;
  Vertex contracted;
};
/// N[A] deleted (N(A) had an edge).
struct FoldedClique {
  std::vector<Vertex> a;
  std::vector<Vertex> na;
};
struct LineComponent {
  std::vector<Vertex> component;
  std::vector<Vertex> chosen;
};
struct EdgeBranchLeft {
  Vertex v, v2;
};
struct EdgeBranchRight {
  Vertex v, v2;
  std::vector<Vertex> common, left, right;
};
struct VertexBranchExclude {
  Vertex v;
};
struct VertexBranchInclude {
  std::vector<Vertex> s;
};

using TraceEvent = std::variant<RemovedUnconfined, RemovedIsolated, FoldedIndependent, FoldedClique, LineComponent,
                                EdgeBranchLeft, EdgeBranchRight, VertexBranchExclude, VertexBranchInclude>;

using SolveTrace = std::vector<TraceEvent>;

/// Short rule name used in statistics ("unconfined", "fold-independent", ...).
std::string_view event_name(const TraceEvent& ev);

struct ExtendingSet {
  std::vector<Vertex> n_star;  ///< neighbors with exactly one outer-neighbor
  std::vector<Vertex> s;       ///< v and the outer-neighbors of n_star, ascending
};

ExtendingSet extending_set(const Graph& g, Vertex v);

/// Simple-case test: some neighbor has no outer-neighbor, or S_v - {v} has an
/// edge.
bool is_unconfined(const Graph& g, Vertex v);

/// Smallest-id complete k-independent set (k degree-(k+1) vertices with equal
/// neighborhoods), or none.
std::optional<std::vector<Vertex>> find_complete_k_independent(const Graph& g, int k);

struct FoldResult {
  Graph graph;
  int gained = 0;
};

/// Folds a complete k-independent set and appends the event to `trace`.
FoldResult fold(const Graph& g, std::span<const Vertex> a, SolveTrace& trace);

/// Called once per applied step with the graphs around it.
using ReduceObserver =
    std::function<void(const Graph& before, const Graph& after, int gained, const TraceEvent& event)>;

struct ReduceResult {
  Graph graph;
  int gained = 0;
};

/// Applies line-component removal, isolated-vertex removal, unconfined
/// removal and folding until none applies. The result has minimum degree at
/// least 3.
ReduceResult reduce(Graph g, SolveTrace& trace, const ReduceObserver& observer = {});

/// True if no rule of `reduce` applies to g.
bool is_reduced(const Graph& g);

/// Replays `trace` backwards over a solution of the final graph. Throws
/// std::logic_error if the trace does not fit the solution.
std::vector<Vertex> reconstruct_certificate(const SolveTrace& trace, std::span<const Vertex> leaf_solution);

}  // namespace mis
