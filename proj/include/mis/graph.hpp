#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mis {

/// Vertex identifier. Ids are stable for the lifetime of a Graph value:
/// deleting a vertex never renumbers the others, and contraction allocates a
/// fresh id that was never used before in that graph (or any graph it was
/// copied from).
using Vertex = std::int32_t;

using Edge = std::pair<Vertex, Vertex>;

/// Dynamic simple undirected graph.
///
/// Adjacency lists are kept sorted, so neighborhood iteration is O(deg) and
/// membership is O(log deg). Removed ids stay allocated but dead.
class Graph {
 public:
  Graph() = default;

  /// Graph on vertices 0..n-1 and no edges.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  /// Allocates a fresh isolated vertex.
  Vertex add_vertex();

  /// Inserts edge uv; a no-op if it already exists. Self-loops are rejected.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  void remove_vertex(Vertex v);
  void remove_vertices(std::span<const Vertex> xs);

  /// Replaces xs by a single new vertex adjacent to N(xs). Returns its id.
  Vertex contract(std::span<const Vertex> xs);

  [[nodiscard]] bool contains(Vertex v) const {
    return v >= 0 && v < id_bound() && alive_[static_cast<std::size_t>(v)];
  }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
  [[nodiscard]] int degree(Vertex v) const;
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const;

  /// Live vertices in ascending id order.
  [[nodiscard]] std::vector<Vertex> vertices() const;
  [[nodiscard]] std::vector<Edge> edges() const;

  [[nodiscard]] int num_vertices() const { return num_alive_; }
  [[nodiscard]] int num_edges() const { return num_edges_; }
  [[nodiscard]] bool empty() const { return num_alive_ == 0; }
  [[nodiscard]] int max_degree() const;
  [[nodiscard]] int min_degree() const;

  /// One past the largest id ever allocated.
  [[nodiscard]] Vertex id_bound() const { return static_cast<Vertex>(adj_.size()); }

  /// Subgraph induced by xs, keeping the same ids (and the same id bound, so
  /// contractions inside it never collide with ids of this graph).
  [[nodiscard]] Graph induced(std::span<const Vertex> xs) const;

  /// Connected components, each sorted; components ordered by smallest id.
  [[nodiscard]] std::vector<std::vector<Vertex>> components() const;

  [[nodiscard]] bool is_independent(std::span<const Vertex> xs) const;

  /// Checks symmetry, simplicity, sortedness and the edge count. Throws
  /// std::logic_error on the first violation.
  void audit() const;

 private:
  void require(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> alive_;
  int num_alive_ = 0;
  int num_edges_ = 0;
};

/// g - xs.
Graph delete_vertices(const Graph& g, std::span<const Vertex> xs);

/// g / xs, together with the id of the contracted vertex.
std::pair<Graph, Vertex> contract_set(const Graph& g, std::span<const Vertex> xs);

/// Vertices at distance exactly two from v, ascending.
std::vector<Vertex> second_neighborhood(const Graph& g, Vertex v);

/// Local statistics of a vertex against the current graph.
struct NeighborhoodStats {
  int degree = 0;
  int inner_edges = 0;   ///< e_v: edges inside G[N(v)]
  int outer_edges = 0;   ///< f_v: edges between N(v) and N2(v)
  int n2_size = 0;       ///< |N2(v)|
  int n2_low_degree = 0; ///< q_v: vertices of N2(v) with degree below the graph's max degree
  int max_degree = 0;    ///< d, the graph maximum degree the stats were taken against
  /// neighbor_degrees[i] = k_i, the number of degree-i neighbors (size d+1).
  std::vector<int> neighbor_degrees;

  [[nodiscard]] int k(int i) const {
    return i >= 0 && i < static_cast<int>(neighbor_degrees.size()) ? neighbor_degrees[static_cast<std::size_t>(i)]
                                                                  : 0;
  }
  /// f_v + (f_v - |N2(v)|), the quantity the optimal-vertex rules threshold.
  [[nodiscard]] int outer_weight() const { return 2 * outer_edges - n2_size; }
};

NeighborhoodStats neighborhood_stats(const Graph& g, Vertex v);

}  // namespace mis
