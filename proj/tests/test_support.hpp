#pragma once

// Reference oracles for the test suites. They work on a plain adjacency
// matrix and share no code with the library algorithms.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "mis/graph.hpp"

namespace oracle {

/// Dense copy of the live part of a graph; index i is the i-th live vertex.
struct Dense {
  std::vector<mis::Vertex> ids;
  std::vector<std::vector<char>> adj;

  explicit Dense(const mis::Graph& g) : ids(g.vertices()) {
    const std::size_t n = ids.size();
    adj.assign(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.edges()) {
      auto iu = static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), u) - ids.begin());
      auto iv = static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
      adj[iu][iv] = adj[iv][iu] = 1;
    }
  }
  [[nodiscard]] std::size_t size() const { return ids.size(); }
  [[nodiscard]] std::size_t index(mis::Vertex v) const {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  }
};

/// Independence number by branching on the lowest remaining index
/// (take it, or drop it); at most 64 vertices.
inline int alpha(const mis::Graph& g) {
  Dense d(g);
  const std::size_t n = d.size();
  if (n > 64) throw std::invalid_argument("oracle limited to 64 vertices");
  std::vector<std::uint64_t> nb(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d.adj[i][j]) nb[i] |= std::uint64_t{1} << j;
  auto rec = [&](auto&& self, std::uint64_t live, int acc, int& best) -> void {
    if (acc + std::popcount(live) <= best) return;
    if (live == 0) {
      best = acc;
      return;
    }
    const int i = std::countr_zero(live);
    const std::uint64_t bit = std::uint64_t{1} << i;
    self(self, live & ~bit & ~nb[static_cast<std::size_t>(i)], acc + 1, best);
    if (nb[static_cast<std::size_t>(i)] & live) self(self, live & ~bit, acc, best);
  };
  int best = 0;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  rec(rec, all, 0, best);
  return best;
}

/// Maximum matching size by exhaustive edge recursion.
inline int matching_number(const mis::Graph& g) {
  const auto edges = g.edges();
  std::set<mis::Vertex> used;
  int best = 0;
  auto rec = [&](auto&& self, std::size_t i, int acc) -> void {
    if (acc + static_cast<int>(edges.size() - i) <= best) return;
    if (i == edges.size()) {
      best = std::max(best, acc);
      return;
    }
    auto [u, v] = edges[i];
    if (!used.count(u) && !used.count(v)) {
      used.insert(u);
      used.insert(v);
      self(self, i + 1, acc + 1);
      used.erase(u);
      used.erase(v);
    }
    self(self, i + 1, acc);
  };
  rec(rec, 0, 0);
  return best;
}

struct Stats {
  int degree = 0, inner = 0, outer = 0, n2 = 0;
  std::vector<int> k;  ///< k[i] = neighbors of degree i
};

/// δ, e_v, f_v, |N2| and neighbor-degree counts from the adjacency matrix.
inline Stats stats(const mis::Graph& g, mis::Vertex v) {
  Dense d(g);
  const std::size_t n = d.size(), x = d.index(v);
  auto deg = [&](std::size_t i) { return static_cast<int>(std::count(d.adj[i].begin(), d.adj[i].end(), 1)); };
  Stats s;
  s.degree = deg(x);
  int maxdeg = 0;
  for (std::size_t i = 0; i < n; ++i) maxdeg = std::max(maxdeg, deg(i));
  s.k.assign(static_cast<std::size_t>(maxdeg) + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!d.adj[x][i]) continue;
    ++s.k[static_cast<std::size_t>(deg(i))];
    for (std::size_t j = 0; j < n; ++j) {
      if (!d.adj[i][j] || j == x) continue;
      if (d.adj[x][j]) {
        if (i < j) ++s.inner;
      } else {
        ++s.outer;
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (j == x || d.adj[x][j]) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (d.adj[x][i] && d.adj[i][j]) {
        ++s.n2;
        break;
      }
  }
  return s;
}

/// Erdős–Rényi graph from its own engine, independent of the library generators.
inline mis::Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  mis::Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (u(rng) < p) g.add_edge(a, b);
  return g;
}

}  // namespace oracle
