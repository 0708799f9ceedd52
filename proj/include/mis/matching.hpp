#pragma once

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mis/graph.hpp"

namespace mis {

/// Component classes removed by the line-graph rule.
enum class LineClass {
  FourRegular,        ///< line graph of a 4-regular graph (6-regular)
  FourFiveBipartite,  ///< line graph of a (4,5)-bipartite graph (7-regular)
  FiveRegular,        ///< line graph of a 5-regular graph (8-regular)
};

std::string_view to_string(LineClass cls);

/// Classifies a connected component. Every vertex must split its
/// neighborhood into exactly one pair of cliques of the class sizes, every
/// clique must be reported by all of its members, and the implied root graph
/// must be simple. Anything else yields none.
std::optional<LineClass> detect_line_class(const Graph& g, std::span<const Vertex> component);

struct RootGraph {
  Graph root;
  /// Root edge (smaller endpoint first) to the line vertex it represents.
  std::map<Edge, Vertex> line_vertex;
};

/// Root graph of a detected component. Throws std::logic_error if the
/// clique partition cannot be built.
RootGraph reconstruct_root_graph(const Graph& g, std::span<const Vertex> component, LineClass cls);

/// Maximum-cardinality matching of a general graph (Edmonds, O(V^3)).
/// Edges are reported with the smaller endpoint first, in ascending order.
std::vector<Edge> maximum_matching(const Graph& g);

/// Maximum independent set of a detected component, as component vertices.
std::vector<Vertex> solve_line_component(const Graph& g, std::span<const Vertex> component, LineClass cls);

}  // namespace mis
