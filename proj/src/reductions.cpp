#include "mis/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "mis/matching.hpp"

namespace mis {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

bool same_neighbors(const Graph& g, Vertex a, Vertex b) {
  auto na = g.neighbors(a), nb = g.neighbors(b);
  return std::equal(na.begin(), na.end(), nb.begin(), nb.end());
}

void validate_complete(const Graph& g, std::span<const Vertex> a) {
  const int k = static_cast<int>(a.size());
  if (k < 1 || k > 2) throw std::invalid_argument("fold needs a set of size 1 or 2");
  for (Vertex v : a) {
    if (!g.contains(v)) throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    if (g.degree(v) != k + 1) throw std::invalid_argument("vertex " + std::to_string(v) + " has the wrong degree");
  }
  if (k == 2 && (a[0] == a[1] || !same_neighbors(g, a[0], a[1])))
    throw std::invalid_argument("fold set does not share one neighborhood");
}

// In-place fold; returns the gain and the event.
std::pair<int, TraceEvent> fold_in_place(Graph& g, std::span<const Vertex> a) {
  validate_complete(g, a);
  std::vector<Vertex> av(a.begin(), a.end());
  std::sort(av.begin(), av.end());
  std::vector<Vertex> na(g.neighbors(av.front()).begin(), g.neighbors(av.front()).end());
  std::vector<Vertex> closed = av;
  closed.insert(closed.end(), na.begin(), na.end());
  const int k = static_cast<int>(av.size());
  if (g.is_independent(na)) {
    Vertex c = g.contract(closed);
    return {k, FoldedIndependent{std::move(av), std::move(na), c}};
  }
  g.remove_vertices(closed);
  return {k, FoldedClique{std::move(av), std::move(na)}};
}

void insert_fresh(std::set<Vertex>& sol, Vertex v) {
  if (!sol.insert(v).second) throw std::logic_error("trace replay adds vertex " + std::to_string(v) + " twice");
}

}  // namespace

std::string_view event_name(const TraceEvent& ev) {
  return std::visit(overloaded{
                        [](const RemovedUnconfined&) { return std::string_view("unconfined"); },
                        [](const RemovedIsolated&) { return std::string_view("isolated"); },
                        [](const FoldedIndependent&) { return std::string_view("fold-independent"); },
                        [](const FoldedClique&) { return std::string_view("fold-clique"); },
                        [](const LineComponent&) { return std::string_view("line-component"); },
                        [](const EdgeBranchLeft&) { return std::string_view("edge-branch-left"); },
                        [](const EdgeBranchRight&) { return std::string_view("edge-branch-right"); },
                        [](const VertexBranchExclude&) { return std::string_view("vertex-branch-exclude"); },
                        [](const VertexBranchInclude&) { return std::string_view("vertex-branch-include"); },
                    },
                    ev);
}

ExtendingSet extending_set(const Graph& g, Vertex v) {
  ExtendingSet out;
  out.s.push_back(v);
  auto nv = g.neighbors(v);
  for (Vertex u : nv) {
    Vertex outer = -1;
    int count = 0;
    for (Vertex z : g.neighbors(u)) {
      if (z == v || std::binary_search(nv.begin(), nv.end(), z)) continue;
      outer = z;
      if (++count > 1) break;
    }
    if (count == 1) {
      out.n_star.push_back(u);
      out.s.push_back(outer);
    }
  }
  std::sort(out.s.begin(), out.s.end());
  out.s.erase(std::unique(out.s.begin(), out.s.end()), out.s.end());
  return out;
}

bool is_unconfined(const Graph& g, Vertex v) {
  auto nv = g.neighbors(v);
  for (Vertex u : nv) {
    bool has_outer = false;
    for (Vertex z : g.neighbors(u))
      if (z != v && !std::binary_search(nv.begin(), nv.end(), z)) {
        has_outer = true;
        break;
      }
    if (!has_outer) return true;
  }
  return !g.is_independent(extending_set(g, v).s);
}

std::optional<std::vector<Vertex>> find_complete_k_independent(const Graph& g, int k) {
  if (k != 1 && k != 2) throw std::invalid_argument("k must be 1 or 2");
  for (Vertex v : g.vertices()) {
    if (g.degree(v) != k + 1) continue;
    if (k == 1) return std::vector<Vertex>{v};
    for (Vertex w : g.neighbors(g.neighbors(v).front()))
      if (w > v && g.degree(w) == 3 && same_neighbors(g, v, w)) return std::vector<Vertex>{v, w};
  }
  return std::nullopt;
}

FoldResult fold(const Graph& g, std::span<const Vertex> a, SolveTrace& trace) {
  FoldResult out{g, 0};
  auto [gained, ev] = fold_in_place(out.graph, a);
  out.gained = gained;
  trace.push_back(std::move(ev));
  return out;
}

ReduceResult reduce(Graph g, SolveTrace& trace, const ReduceObserver& observer) {
  int s = 0;
  bool changed = false;
  auto step = [&](auto&& mutate) {
    std::optional<Graph> before;
    if (observer) before = g;
    auto [gained, ev] = mutate(g);
    if (observer) observer(*before, g, gained, ev);
    trace.push_back(std::move(ev));
    s += gained;
    changed = true;
  };

  do {
    changed = false;

    for (const auto& comp : g.components()) {
      auto cls = detect_line_class(g, comp);
      if (!cls) continue;
      step([&](Graph& h) {
        auto chosen = solve_line_component(h, comp, *cls);
        h.remove_vertices(comp);
        int gained = static_cast<int>(chosen.size());
        return std::pair<int, TraceEvent>{gained, LineComponent{comp, std::move(chosen)}};
      });
    }

    for (Vertex v : g.vertices()) {
      if (g.degree(v) != 0) continue;
      step([&](Graph& h) {
        h.remove_vertex(v);
        return std::pair<int, TraceEvent>{1, RemovedIsolated{v}};
      });
    }

    for (Vertex v : g.vertices()) {
      if (!g.contains(v) || !is_unconfined(g, v)) continue;
      step([&](Graph& h) {
        h.remove_vertex(v);
        return std::pair<int, TraceEvent>{0, RemovedUnconfined{v}};
      });
    }

    for (;;) {
      auto a = find_complete_k_independent(g, 1);
      if (!a) a = find_complete_k_independent(g, 2);
      if (!a) break;
      step([&](Graph& h) { return fold_in_place(h, *a); });
    }
  } while (changed);

  return {std::move(g), s};
}

bool is_reduced(const Graph& g) {
  for (Vertex v : g.vertices())
    if (g.degree(v) == 0 || is_unconfined(g, v)) return false;
  if (find_complete_k_independent(g, 1) || find_complete_k_independent(g, 2)) return false;
  for (const auto& comp : g.components())
    if (detect_line_class(g, comp)) return false;
  return true;
}

std::vector<Vertex> reconstruct_certificate(const SolveTrace& trace, std::span<const Vertex> leaf_solution) {
  std::set<Vertex> sol;
  for (Vertex v : leaf_solution) insert_fresh(sol, v);

  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    std::visit(overloaded{
                   [](const RemovedUnconfined&) {},
                   [](const EdgeBranchLeft&) {},
                   [](const VertexBranchExclude&) {},
                   [&](const RemovedIsolated& e) { insert_fresh(sol, e.v); },
                   [&](const FoldedIndependent& e) {
                     if (sol.erase(e.contracted)) {
                       for (Vertex u : e.na) insert_fresh(sol, u);
                     } else {
                       for (Vertex u : e.a) insert_fresh(sol, u);
                     }
                   },
                   [&](const FoldedClique& e) {
                     for (Vertex u : e.a) insert_fresh(sol, u);
                   },
                   [&](const LineComponent& e) {
                     for (Vertex u : e.chosen) insert_fresh(sol, u);
                   },
                   [&](const EdgeBranchRight& e) {
                     bool hits_left = std::any_of(e.left.begin(), e.left.end(),
                                                  [&](Vertex u) { return sol.count(u) > 0; });
                     insert_fresh(sol, hits_left ? e.v2 : e.v);
                   },
                   [&](const VertexBranchInclude& e) {
                     for (Vertex u : e.s) insert_fresh(sol, u);
                   },
               },
               *it);
  }
  return {sol.begin(), sol.end()};
}

}  // namespace mis
