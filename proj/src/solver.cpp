#include "mis/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "mis/branching.hpp"

namespace mis {

namespace {

class Search {
 public:
  Search(const SolverOptions& options, SearchStats& stats) : opt_(options), stats_(stats) {}

  std::vector<Vertex> node(Graph g, int level, int depth) {
    if (opt_.deadline && std::chrono::steady_clock::now() > *opt_.deadline) throw SolveTimeout();
    ++stats_.branch_nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);

    SolveTrace trace;
    ReduceObserver observer;
    if (opt_.on_reduce)
      observer = [&](const Graph& before, const Graph& after, int, const TraceEvent& ev) {
        opt_.on_reduce(level, before, after, ev);
      };
    auto reduced = reduce(std::move(g), trace, observer);
    for (const auto& ev : trace) ++stats_.reductions[std::string(event_name(ev))];

    const Graph& h = reduced.graph;
    std::vector<Vertex> sub;
    if (!h.empty()) {
      auto comps = h.components();
      if (comps.size() > 1) {
        for (const auto& comp : comps) {
          auto part = node(h.induced(comp), level, depth + 1);
          sub.insert(sub.end(), part.begin(), part.end());
        }
      } else {
        sub = branch(h, level, depth, trace);
      }
    }
    return reconstruct_certificate(trace, sub);
  }

 private:
  static Vertex smallest_max_degree(const Graph& g) {
    const int d = g.max_degree();
    for (Vertex v : g.vertices())
      if (g.degree(v) == d) return v;
    throw std::logic_error("empty graph has no maximum-degree vertex");
  }

  std::vector<Vertex> branch(const Graph& h, int level, int depth, SolveTrace& trace) {
    for (;;) {
      const int d = h.max_degree();
      if (level == kGeneralLevel) {
        if (d >= kGeneralLevel) return vertex_branch(h, smallest_max_degree(h), level, depth, trace, "vertex-high-9");
        level = 8;
        continue;
      }
      if (level == kFallbackLevel) return vertex_branch(h, smallest_max_degree(h), level, depth, trace, "fallback");
      if (d > level)
        return vertex_branch(h, smallest_max_degree(h), level, depth, trace, "vertex-high-" + std::to_string(level));
      if (d == level) {
        auto shorts = find_short_edges(h, level);
        if (!shorts.empty()) {
          auto e = select_optimal_short_edge(h, shorts);
          return edge_branch(h, e, level, depth, trace);
        }
        auto pick = select_optimal_vertex(h, level);
        return vertex_branch(h, pick.v, level, depth, trace,
                             "optimal-" + std::to_string(level) + "-clause-" + std::to_string(pick.clause));
      }
      --level;
    }
  }

  std::vector<Vertex> vertex_branch(const Graph& h, Vertex v, int level, int depth, SolveTrace& trace,
                                    const std::string& selector) {
    ++stats_.selectors[selector];
    auto vb = vertex_branch_subproblems(h, v);
    if (opt_.on_branch) {
      opt_.on_branch(level, h, vb.excluded);
      opt_.on_branch(level, h, vb.included);
    }
    auto out = node(std::move(vb.excluded), level, depth + 1);
    auto in = node(std::move(vb.included), level, depth + 1);
    if (in.size() + vb.s.size() > out.size()) {
      trace.push_back(VertexBranchInclude{vb.s});
      return in;
    }
    trace.push_back(VertexBranchExclude{v});
    return out;
  }

  std::vector<Vertex> edge_branch(const Graph& h, Edge e, int level, int depth, SolveTrace& trace) {
    ++stats_.selectors["short-edge-" + std::to_string(level)];
    auto eb = edge_branch_subproblems(h, e.first, e.second);
    if (opt_.on_branch) {
      opt_.on_branch(level, h, eb.deleted);
      opt_.on_branch(level, h, eb.dagger);
    }
    auto del = node(std::move(eb.deleted), level, depth + 1);
    auto dag = node(std::move(eb.dagger), level, depth + 1);
    if (dag.size() + 1 > del.size()) {
      trace.push_back(EdgeBranchRight{eb.v, eb.v2, eb.common, eb.left, eb.right});
      return dag;
    }
    trace.push_back(EdgeBranchLeft{eb.v, eb.v2});
    return del;
  }

  const SolverOptions& opt_;
  SearchStats& stats_;
};

Solution run(const Graph& g, int level, const SolverOptions& options) {
  Solution s;
  Search search(options, s.stats);
  s.witness = search.node(g, level, 0);
  s.size = static_cast<int>(s.witness.size());
  if (!is_independent_set(g, s.witness)) throw std::logic_error("solver produced a dependent witness");
  return s;
}

}  // namespace

Solution solve(const Graph& g, const SolverOptions& options) { return run(g, kGeneralLevel, options); }

Solution mis_theta(const Graph& g, int theta, const SolverOptions& options) {
  if (theta < 6 || theta > 8) throw std::invalid_argument("theta must be 6, 7 or 8");
  return run(g, theta, options);
}

Solution fallback_low_degree(const Graph& g, const SolverOptions& options) {
  return run(g, kFallbackLevel, options);
}

std::pair<int, std::vector<Vertex>> brute_force_mis(const Graph& g) {
  if (g.num_vertices() > 32) throw std::invalid_argument("brute force is limited to 32 vertices");
  const auto verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && g.adjacent(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]))
        adj[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;

  // Returns the best set inside `live` as a bitmask.
  auto best = [&](auto&& self, std::uint32_t live) -> std::uint32_t {
    if (live == 0) return 0;
    int pick = -1, pick_deg = -1;
    for (std::uint32_t m = live; m; m &= m - 1) {
      int i = std::countr_zero(m);
      int d = std::popcount(adj[static_cast<std::size_t>(i)] & live);
      if (d > pick_deg) {
        pick = i;
        pick_deg = d;
      }
    }
    const std::uint32_t bit = std::uint32_t{1} << pick;
    const std::uint32_t nbrs = adj[static_cast<std::size_t>(pick)] & live;
    std::uint32_t with = bit | self(self, live & ~bit & ~nbrs);
    if (pick_deg == 0) return with;
    std::uint32_t without = self(self, live & ~bit);
    return std::popcount(without) > std::popcount(with) ? without : with;
  };

  const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  std::uint32_t mask = best(best, all);
  std::vector<Vertex> witness;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1u) witness.push_back(verts[static_cast<std::size_t>(i)]);
  return {static_cast<int>(witness.size()), witness};
}

bool is_independent_set(const Graph& g, std::span<const Vertex> xs) {
  std::set<Vertex> seen;
  for (Vertex v : xs) {
    if (!g.contains(v) || !seen.insert(v).second) return false;
    for (Vertex u : g.neighbors(v))
      if (seen.count(u)) return false;
  }
  return true;
}

}  // namespace mis
