#include "mis/branching.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

#include "mis/reductions.hpp"

namespace mis {

namespace {

void require_theta(int theta) {
  if (theta < 6 || theta > 8) throw std::invalid_argument("theta must be 6, 7 or 8");
}

int common_count(const Graph& g, Vertex v, Vertex u) {
  auto a = g.neighbors(v), b = g.neighbors(u);
  int n = 0;
  for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

}  // namespace

VertexBranch vertex_branch_subproblems(const Graph& g, Vertex v) {
  VertexBranch out;
  out.v = v;
  out.s = extending_set(g, v).s;
  if (!g.is_independent(out.s))
    throw std::invalid_argument("S_v of vertex " + std::to_string(v) + " is not independent");
  out.excluded = delete_vertices(g, std::span<const Vertex>(&v, 1));
  std::vector<Vertex> closed = out.s;
  for (Vertex x : out.s) closed.insert(closed.end(), g.neighbors(x).begin(), g.neighbors(x).end());
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  out.included = delete_vertices(g, closed);
  return out;
}

EdgeBranch edge_branch_subproblems(const Graph& g, Vertex v, Vertex v2) {
  if (!g.adjacent(v, v2))
    throw std::invalid_argument("vertices " + std::to_string(v) + " and " + std::to_string(v2) + " are not adjacent");
  EdgeBranch out;
  out.v = v;
  out.v2 = v2;
  auto a = g.neighbors(v), b = g.neighbors(v2);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.common));
  for (Vertex u : a)
    if (u != v2 && !std::binary_search(b.begin(), b.end(), u)) out.left.push_back(u);
  for (Vertex u : b)
    if (u != v && !std::binary_search(a.begin(), a.end(), u)) out.right.push_back(u);

  const Vertex pair[2] = {v, v2};
  out.deleted = delete_vertices(g, pair);
  out.dagger = out.deleted;
  out.dagger.remove_vertices(out.common);
  for (Vertex x : out.left)
    for (Vertex y : out.right) out.dagger.add_edge(x, y);
  return out;
}

std::vector<Edge> find_short_edges(const Graph& g, int theta) {
  require_theta(theta);
  std::vector<Edge> out;
  for (Vertex v : g.vertices()) {
    const int dv = g.degree(v);
    for (Vertex u : g.neighbors(v)) {
      const int du = g.degree(u);
      bool shape = false;
      int need = 0;
      if (theta == 6) {
        shape = dv == 6 && (du == 5 || (du == 6 && v < u));
        need = 3;
      } else {
        shape = dv == theta && du == theta && v < u;
        need = 4;
      }
      if (shape && common_count(g, v, u) >= need) out.emplace_back(v, u);
    }
  }
  return out;
}

Edge select_optimal_short_edge(const Graph& g, std::span<const Edge> edges) {
  if (edges.empty()) throw std::invalid_argument("no short edges to choose from");
  Edge best = edges.front();
  int best_score = common_count(g, best.first, best.second) - g.degree(best.second);
  for (const auto& e : edges.subspan(1)) {
    int score = common_count(g, e.first, e.second) - g.degree(e.second);
    if (score > best_score || (score == best_score && e < best)) {
      best = e;
      best_score = score;
    }
  }
  return best;
}

int optimal_clause(const Graph& g, Vertex v, int theta) {
  require_theta(theta);
  if (g.degree(v) != theta) return 0;
  const auto st = neighborhood_stats(g, v);
  const int x = st.outer_weight();
  switch (theta) {
    case 6: {
      const int xq = x + st.n2_low_degree;
      if (st.k(3) >= 1 || st.k(6) <= 3) return 1;
      if (st.k(6) == 4 && st.k(5) <= 1) return 2;
      if (st.k(6) == 4 && st.k(5) == 2 && xq >= 17) return 3;
      if (st.k(6) == 5 && st.k(4) == 1 && xq >= 18) return 4;
      if (st.k(6) == 5 && st.k(5) == 1 && xq >= 19) return 5;
      if (st.k(6) == 6 && xq >= 22) return 6;
      return 0;
    }
    case 7:
      if (!extending_set(g, v).n_star.empty()) return 1;
      if (st.k(7) <= 5) return 2;
      if (st.k(7) == 6 && x >= 22 - 2 * st.k(3) - st.k(4)) return 3;
      if (st.k(7) == 7 && x >= 26) return 4;
      return 0;
    default:
      if (st.k(8) <= 7) return 1;
      if (st.k(8) == 8 && x >= 36) return 2;
      return 0;
  }
}

OptimalVertex select_optimal_vertex(const Graph& g, int theta) {
  require_theta(theta);
  OptimalVertex best;
  for (Vertex v : g.vertices()) {
    int c = optimal_clause(g, v, theta);
    if (c != 0 && (best.clause == 0 || c < best.clause)) best = {v, c};
  }
  if (best.clause == 0)
    throw std::logic_error("no optimal degree-" + std::to_string(theta) + " vertex in a reduced graph");
  return best;
}

}  // namespace mis
