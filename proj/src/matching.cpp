#include "mis/matching.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace mis {

namespace {

struct CliqueSizes {
  int degree;
  int a;  // neighbors in the first clique, excluding the vertex itself
  int b;
};

CliqueSizes sizes_of(LineClass cls) {
  switch (cls) {
    case LineClass::FourRegular: return {6, 3, 3};
    case LineClass::FourFiveBipartite: return {7, 3, 4};
    case LineClass::FiveRegular: return {8, 4, 4};
  }
  throw std::logic_error("unknown line class");
}

bool is_clique(const Graph& g, const std::vector<Vertex>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!g.adjacent(xs[i], xs[j])) return false;
  return true;
}

// All ways to split N(v) into cliques X, Y with |X| = a, |Y| = b. When
// a == b the pair is reported once (X holds the smallest neighbor).
std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> clique_splits(const Graph& g, Vertex v, int a,
                                                                               int b) {
  std::vector<Vertex> nv(g.neighbors(v).begin(), g.neighbors(v).end());
  const int d = static_cast<int>(nv.size());
  std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> out;
  if (d != a + b) return out;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    if (std::popcount(mask) != a) continue;
    if (a == b && !(mask & 1u)) continue;
    std::vector<Vertex> x, y;
    for (int i = 0; i < d; ++i) (mask >> i & 1u ? x : y).push_back(nv[static_cast<std::size_t>(i)]);
    if (is_clique(g, x) && is_clique(g, y)) out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

struct Partition {
  std::vector<std::vector<Vertex>> cliques;           // sorted members, including the line vertices
  std::vector<std::pair<int, int>> vertex_cliques;    // per component position
};

std::optional<Partition> clique_partition(const Graph& g, std::span<const Vertex> component, LineClass cls) {
  const auto sz = sizes_of(cls);
  std::map<std::vector<Vertex>, int> index;
  Partition p;
  auto intern = [&](std::vector<Vertex> c) {
    std::sort(c.begin(), c.end());
    auto [it, fresh] = index.emplace(std::move(c), static_cast<int>(p.cliques.size()));
    if (fresh) p.cliques.push_back(it->first);
    return it->second;
  };

  for (Vertex v : component) {
    if (g.degree(v) != sz.degree) return std::nullopt;
    auto splits = clique_splits(g, v, sz.a, sz.b);
    if (splits.size() != 1) return std::nullopt;
    auto [x, y] = std::move(splits.front());
    x.push_back(v);
    y.push_back(v);
    p.vertex_cliques.emplace_back(intern(std::move(x)), intern(std::move(y)));
  }

  // Every clique must be claimed by each of its members.
  std::unordered_map<Vertex, std::size_t> pos;
  for (std::size_t i = 0; i < component.size(); ++i) pos.emplace(component[i], i);
  for (std::size_t c = 0; c < p.cliques.size(); ++c) {
    for (Vertex u : p.cliques[c]) {
      auto it = pos.find(u);
      if (it == pos.end()) return std::nullopt;
      auto [c1, c2] = p.vertex_cliques[it->second];
      if (c1 != static_cast<int>(c) && c2 != static_cast<int>(c)) return std::nullopt;
    }
  }

  // Simple root: no two line vertices join the same pair of cliques.
  std::vector<std::pair<int, int>> pairs;
  for (auto [c1, c2] : p.vertex_cliques) pairs.emplace_back(std::min(c1, c2), std::max(c1, c2));
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) return std::nullopt;

  if (cls == LineClass::FourFiveBipartite) {
    for (auto [c1, c2] : p.vertex_cliques)
      if (p.cliques[static_cast<std::size_t>(c1)].size() == p.cliques[static_cast<std::size_t>(c2)].size())
        return std::nullopt;
  }
  return p;
}

}  // namespace

std::string_view to_string(LineClass cls) {
  switch (cls) {
    case LineClass::FourRegular: return "line-of-4-regular";
    case LineClass::FourFiveBipartite: return "line-of-4-5-bipartite";
    case LineClass::FiveRegular: return "line-of-5-regular";
  }
  return "unknown";
}

std::optional<LineClass> detect_line_class(const Graph& g, std::span<const Vertex> component) {
  if (component.empty()) return std::nullopt;
  const int d = g.degree(component.front());
  LineClass cls;
  switch (d) {
    case 6: cls = LineClass::FourRegular; break;
    case 7: cls = LineClass::FourFiveBipartite; break;
    case 8: cls = LineClass::FiveRegular; break;
    default: return std::nullopt;
  }
  for (Vertex v : component)
    if (g.degree(v) != d) return std::nullopt;
  if (!clique_partition(g, component, cls)) return std::nullopt;
  return cls;
}

RootGraph reconstruct_root_graph(const Graph& g, std::span<const Vertex> component, LineClass cls) {
  auto p = clique_partition(g, component, cls);
  if (!p) throw std::logic_error("clique partition failed for a detected line component");
  RootGraph out;
  out.root = Graph(static_cast<int>(p->cliques.size()));
  for (std::size_t i = 0; i < component.size(); ++i) {
    auto [c1, c2] = p->vertex_cliques[i];
    Edge e{std::min(c1, c2), std::max(c1, c2)};
    out.root.add_edge(e.first, e.second);
    out.line_vertex.emplace(e, component[i]);
  }
  return out;
}

std::vector<Edge> maximum_matching(const Graph& g) {
  // Dense relabelling of live vertices.
  const auto verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  std::unordered_map<Vertex, int> local;
  for (int i = 0; i < n; ++i) local.emplace(verts[static_cast<std::size_t>(i)], i);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (Vertex u : g.neighbors(verts[static_cast<std::size_t>(i)])) adj[static_cast<std::size_t>(i)].push_back(local.at(u));

  auto at = [](std::vector<int>& xs, int i) -> int& { return xs[static_cast<std::size_t>(i)]; };
  std::vector<int> match(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n)),
      base(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n)), blossom(static_cast<std::size_t>(n));

  auto lca = [&](int a, int b) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (;;) {
      a = at(base, a);
      seen[static_cast<std::size_t>(a)] = 1;
      if (at(match, a) == -1) break;
      a = at(parent, at(match, a));
    }
    for (;;) {
      b = at(base, b);
      if (seen[static_cast<std::size_t>(b)]) return b;
      b = at(parent, at(match, b));
    }
  };

  auto mark_path = [&](int v, int b, int child) {
    while (at(base, v) != b) {
      blossom[static_cast<std::size_t>(at(base, v))] = 1;
      blossom[static_cast<std::size_t>(at(base, at(match, v)))] = 1;
      at(parent, v) = child;
      child = at(match, v);
      v = at(parent, at(match, v));
    }
  };

  auto find_path = [&](int root) -> int {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i) at(base, i) = i;
    used[static_cast<std::size_t>(root)] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj[static_cast<std::size_t>(v)]) {
        if (at(base, v) == at(base, to) || at(match, v) == to) continue;
        if (to == root || (at(match, to) != -1 && at(parent, at(match, to)) != -1)) {
          int cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (!blossom[static_cast<std::size_t>(at(base, i))]) continue;
            at(base, i) = cur;
            if (!used[static_cast<std::size_t>(i)]) {
              used[static_cast<std::size_t>(i)] = 1;
              q.push(i);
            }
          }
        } else if (at(parent, to) == -1) {
          at(parent, to) = v;
          if (at(match, to) == -1) return to;
          used[static_cast<std::size_t>(at(match, to))] = 1;
          q.push(at(match, to));
        }
      }
    }
    return -1;
  };

  // Greedy start.
  for (int v = 0; v < n; ++v) {
    if (at(match, v) != -1) continue;
    for (int u : adj[static_cast<std::size_t>(v)])
      if (at(match, u) == -1) {
        at(match, u) = v;
        at(match, v) = u;
        break;
      }
  }
  for (int v = 0; v < n; ++v) {
    if (at(match, v) != -1) continue;
    int end = find_path(v);
    while (end != -1) {
      int pv = at(parent, end), ppv = at(match, pv);
      at(match, end) = pv;
      at(match, pv) = end;
      end = ppv;
    }
  }

  std::vector<Edge> out;
  for (int v = 0; v < n; ++v) {
    int u = at(match, v);
    if (u > v) out.emplace_back(verts[static_cast<std::size_t>(v)], verts[static_cast<std::size_t>(u)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> solve_line_component(const Graph& g, std::span<const Vertex> component, LineClass cls) {
  auto rg = reconstruct_root_graph(g, component, cls);
  std::vector<Vertex> out;
  for (const auto& e : maximum_matching(rg.root)) out.push_back(rg.line_vertex.at(e));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mis
