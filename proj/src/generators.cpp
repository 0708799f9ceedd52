#include "mis/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mis::gen {

namespace {

void require_size(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

template <class T>
void shuffle(std::vector<T>& xs, Rng& rng) {
  for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[rng.below(i)]);
}

// Pairs stubs a[i] with b[i]; false on a loop or a repeated edge.
bool pair_stubs(const std::vector<Vertex>& a, const std::vector<Vertex>& b, std::vector<Edge>& out) {
  std::set<Edge> seen;
  out.clear();
  for (std::size_t i = 0; i < a.size(); ++i) {
    Vertex u = std::min(a[i], b[i]), v = std::max(a[i], b[i]);
    if (u == v || !seen.emplace(u, v).second) return false;
    out.emplace_back(u, v);
  }
  return true;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

Graph gnp(int n, double p, std::uint64_t seed) {
  require_size(n);
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  Rng rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

Graph random_regular(int n, int k, std::uint64_t seed, int max_attempts) {
  require_size(n);
  if (k < 0 || (k > 0 && k >= n))
    throw std::invalid_argument("degree " + std::to_string(k) + " is infeasible for n = " + std::to_string(n));
  if ((static_cast<long long>(n) * k) % 2 != 0) throw std::invalid_argument("n * k must be even");
  Rng rng(seed);
  // Stub pairing that only draws admissible pairs; a dead end restarts.
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Vertex> stubs;
    for (Vertex v = 0; v < n; ++v)
      for (int i = 0; i < k; ++i) stubs.push_back(v);
    Graph g(n);
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      std::size_t i = rng.below(stubs.size()), j = rng.below(stubs.size());
      int tries = 0;
      while ((i == j || stubs[i] == stubs[j] || g.adjacent(stubs[i], stubs[j])) && ++tries < 64) {
        i = rng.below(stubs.size());
        j = rng.below(stubs.size());
      }
      if (tries < 64) {
        g.add_edge(stubs[i], stubs[j]);
        if (i < j) std::swap(i, j);
        stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(i));
        stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(j));
        continue;
      }
      std::vector<std::pair<std::size_t, std::size_t>> ok;
      for (std::size_t i = 0; i < stubs.size(); ++i)
        for (std::size_t j = i + 1; j < stubs.size(); ++j)
          if (stubs[i] != stubs[j] && !g.adjacent(stubs[i], stubs[j])) ok.emplace_back(i, j);
      if (ok.empty()) {
        stuck = true;
        break;
      }
      auto [a, b] = ok[rng.below(ok.size())];
      g.add_edge(stubs[a], stubs[b]);
      stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(b));
      stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(a));
    }
    if (!stuck) return g;
  }
  throw std::runtime_error("no simple regular graph found within the attempt limit");
}

Graph random_biregular(int na, int da, int nb, int db, std::uint64_t seed, int max_attempts) {
  require_size(na);
  require_size(nb);
  if (static_cast<long long>(na) * da != static_cast<long long>(nb) * db)
    throw std::invalid_argument("side degree sums differ");
  if (da > nb || db > na) throw std::invalid_argument("side degree exceeds the other side");
  Rng rng(seed);
  std::vector<Vertex> a, b;
  for (Vertex v = 0; v < na; ++v)
    for (int i = 0; i < da; ++i) a.push_back(v);
  for (Vertex v = 0; v < nb; ++v)
    for (int i = 0; i < db; ++i) b.push_back(na + v);
  std::vector<Edge> edges;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    shuffle(b, rng);
    if (pair_stubs(a, b, edges)) return Graph::from_edges(na + nb, edges);
  }
  throw std::runtime_error("no simple biregular graph found within the attempt limit");
}

Graph path(int n) {
  require_size(n);
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n) {
  require_size(n);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  const int parts[] = {a, b};
  return complete_multipartite(parts);
}

Graph complete_multipartite(std::span<const int> parts) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    require_size(parts[p]);
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) g.add_edge(u, v);
  return g;
}

Graph hypercube(int dim) {
  if (dim < 0 || dim > 20) throw std::invalid_argument("hypercube dimension out of range");
  const int n = 1 << dim;
  Graph g(n);
  for (Vertex v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (Vertex u = v ^ (1 << b); v < u) g.add_edge(v, u);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Graph dodecahedron() {
  // Generalized Petersen graph GP(10, 2).
  Graph g(20);
  for (Vertex i = 0; i < 10; ++i) {
    g.add_edge(i, (i + 1) % 10);
    g.add_edge(i, 10 + i);
    g.add_edge(10 + i, 10 + (i + 2) % 10);
  }
  return g;
}

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  Graph l(m);
  std::vector<std::vector<Vertex>> at(static_cast<std::size_t>(g.id_bound()));
  for (int i = 0; i < m; ++i) {
    at[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].first)].push_back(i);
    at[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].second)].push_back(i);
  }
  for (const auto& star : at)
    for (std::size_t x = 0; x < star.size(); ++x)
      for (std::size_t y = x + 1; y < star.size(); ++y) l.add_edge(star[x], star[y]);
  return l;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const Vertex shift = a.id_bound();
  Graph g(a.id_bound() + b.id_bound());
  for (Vertex v = 0; v < a.id_bound(); ++v)
    if (!a.contains(v)) g.remove_vertex(v);
  for (Vertex v = 0; v < b.id_bound(); ++v)
    if (!b.contains(v)) g.remove_vertex(shift + v);
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(shift + u, shift + v);
  return g;
}

}  // namespace mis::gen
