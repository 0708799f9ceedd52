#pragma once

#include <span>
#include <vector>

#include "mis/graph.hpp"

namespace mis {

struct VertexBranch {
  Vertex v = -1;
  std::vector<Vertex> s;  ///< S_v
  Graph excluded;         ///< g - v
  Graph included;         ///< g - N[S_v]
  [[nodiscard]] int gained_included() const { return static_cast<int>(s.size()); }
};

/// Throws std::invalid_argument if S_v is not independent (v is unconfined
/// and the include branch would not be an independent set).
VertexBranch vertex_branch_subproblems(const Graph& g, Vertex v);

struct EdgeBranch {
  Vertex v = -1, v2 = -1;
  std::vector<Vertex> common;  ///< N(v) ∩ N(v2)
  std::vector<Vertex> left;    ///< N(v) - N[v2]
  std::vector<Vertex> right;   ///< N(v2) - N[v]
  Graph deleted;               ///< g - {v, v2}
  Graph dagger;                ///< g - ({v, v2} ∪ common) plus all left-right edges
};

EdgeBranch edge_branch_subproblems(const Graph& g, Vertex v, Vertex v2);

/// Short edges (v, v2) for level theta. For theta = 6, v has degree 6 and v2
/// degree 5 or 6; pairs with both endpoints of degree 6 are listed once, with
/// v < v2. Output is in ascending (v, v2) order.
std::vector<Edge> find_short_edges(const Graph& g, int theta);

/// Edge maximizing |N(v) ∩ N(v2)| - δ(v2), smallest pair on ties.
Edge select_optimal_short_edge(const Graph& g, std::span<const Edge> edges);

struct OptimalVertex {
  Vertex v = -1;
  int clause = 0;  ///< 1-based index of the satisfied clause
};

/// Smallest clause index first, then smallest id. Throws std::logic_error if
/// no degree-theta vertex qualifies.
OptimalVertex select_optimal_vertex(const Graph& g, int theta);

/// Earliest optimal-vertex clause satisfied by v at level theta, or 0.
int optimal_clause(const Graph& g, Vertex v, int theta);

}  // namespace mis
