#include "mis/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mis {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

bool sorted_contains(const std::vector<Vertex>& xs, Vertex v) {
  return std::binary_search(xs.begin(), xs.end(), v);
}

void sorted_insert(std::vector<Vertex>& xs, Vertex v) {
  xs.insert(std::lower_bound(xs.begin(), xs.end(), v), v);
}

void sorted_erase(std::vector<Vertex>& xs, Vertex v) {
  auto it = std::lower_bound(xs.begin(), xs.end(), v);
  if (it != xs.end() && *it == v) xs.erase(it);
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.resize(idx(n));
  alive_.assign(idx(n), 1);
  num_alive_ = n;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::require(Vertex v) const {
  if (!contains(v)) throw std::invalid_argument("unknown vertex id " + std::to_string(v));
}

Vertex Graph::add_vertex() {
  adj_.emplace_back();
  alive_.push_back(1);
  ++num_alive_;
  return id_bound() - 1;
}

void Graph::add_edge(Vertex u, Vertex v) {
  require(u);
  require(v);
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  if (sorted_contains(adj_[idx(u)], v)) return;
  sorted_insert(adj_[idx(u)], v);
  sorted_insert(adj_[idx(v)], u);
  ++num_edges_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  require(u);
  require(v);
  if (!sorted_contains(adj_[idx(u)], v)) return;
  sorted_erase(adj_[idx(u)], v);
  sorted_erase(adj_[idx(v)], u);
  --num_edges_;
}

void Graph::remove_vertex(Vertex v) {
  require(v);
  for (Vertex u : adj_[idx(v)]) sorted_erase(adj_[idx(u)], v);
  num_edges_ -= static_cast<int>(adj_[idx(v)].size());
  adj_[idx(v)].clear();
  adj_[idx(v)].shrink_to_fit();
  alive_[idx(v)] = 0;
  --num_alive_;
}

void Graph::remove_vertices(std::span<const Vertex> xs) {
  for (Vertex v : xs) require(v);
  for (Vertex v : xs)
    if (contains(v)) remove_vertex(v);
}

Vertex Graph::contract(std::span<const Vertex> xs) {
  if (xs.empty()) throw std::invalid_argument("cannot contract an empty set");
  for (Vertex v : xs) require(v);
  std::vector<Vertex> members(xs.begin(), xs.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  std::vector<Vertex> outside;
  for (Vertex v : members)
    for (Vertex u : adj_[idx(v)])
      if (!std::binary_search(members.begin(), members.end(), u)) outside.push_back(u);
  std::sort(outside.begin(), outside.end());
  outside.erase(std::unique(outside.begin(), outside.end()), outside.end());

  remove_vertices(members);
  Vertex c = add_vertex();
  for (Vertex u : outside) add_edge(c, u);
  return c;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  require(u);
  require(v);
  return sorted_contains(adj_[idx(u)], v);
}

int Graph::degree(Vertex v) const {
  require(v);
  return static_cast<int>(adj_[idx(v)].size());
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  require(v);
  return adj_[idx(v)];
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(idx(num_alive_));
  for (Vertex v = 0; v < id_bound(); ++v)
    if (alive_[idx(v)]) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(idx(num_edges_));
  for (Vertex v = 0; v < id_bound(); ++v)
    for (Vertex u : adj_[idx(v)])
      if (v < u) out.emplace_back(v, u);
  return out;
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < id_bound(); ++v)
    if (alive_[idx(v)]) d = std::max(d, static_cast<int>(adj_[idx(v)].size()));
  return d;
}

int Graph::min_degree() const {
  int d = -1;
  for (Vertex v = 0; v < id_bound(); ++v) {
    if (!alive_[idx(v)]) continue;
    int dv = static_cast<int>(adj_[idx(v)].size());
    if (d < 0 || dv < d) d = dv;
  }
  return std::max(d, 0);
}

Graph Graph::induced(std::span<const Vertex> xs) const {
  Graph h;
  h.adj_.resize(adj_.size());
  h.alive_.assign(alive_.size(), 0);
  for (Vertex v : xs) {
    require(v);
    if (!h.alive_[idx(v)]) {
      h.alive_[idx(v)] = 1;
      ++h.num_alive_;
    }
  }
  for (Vertex v : xs) {
    auto& out = h.adj_[idx(v)];
    if (!out.empty()) continue;
    for (Vertex u : adj_[idx(v)])
      if (h.alive_[idx(u)]) out.push_back(u);
  }
  int twice = 0;
  for (const auto& a : h.adj_) twice += static_cast<int>(a.size());
  h.num_edges_ = twice / 2;
  return h;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(adj_.size(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < id_bound(); ++s) {
    if (!alive_[idx(s)] || seen[idx(s)]) continue;
    std::vector<Vertex> comp;
    stack.push_back(s);
    seen[idx(s)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : adj_[idx(v)])
        if (!seen[idx(u)]) {
          seen[idx(u)] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_independent(std::span<const Vertex> xs) const {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    require(xs[i]);
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) return false;
      if (adjacent(xs[i], xs[j])) return false;
    }
  }
  return true;
}

void Graph::audit() const {
  if (alive_.size() != adj_.size()) throw std::logic_error("graph audit: size mismatch");
  int alive = 0;
  long twice = 0;
  for (Vertex v = 0; v < id_bound(); ++v) {
    const auto& nv = adj_[idx(v)];
    if (!alive_[idx(v)]) {
      if (!nv.empty()) throw std::logic_error("graph audit: dead vertex with edges");
      continue;
    }
    ++alive;
    twice += static_cast<long>(nv.size());
    for (std::size_t i = 0; i < nv.size(); ++i) {
      Vertex u = nv[i];
      if (u == v) throw std::logic_error("graph audit: self-loop at " + std::to_string(v));
      if (i > 0 && nv[i - 1] >= u) throw std::logic_error("graph audit: unsorted or parallel edge at " + std::to_string(v));
      if (!contains(u)) throw std::logic_error("graph audit: edge to dead vertex");
      if (!sorted_contains(adj_[idx(u)], v)) throw std::logic_error("graph audit: asymmetric edge");
    }
  }
  if (alive != num_alive_) throw std::logic_error("graph audit: vertex count");
  if (twice != 2L * num_edges_) throw std::logic_error("graph audit: edge count");
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> xs) {
  Graph h = g;
  h.remove_vertices(xs);
  return h;
}

std::pair<Graph, Vertex> contract_set(const Graph& g, std::span<const Vertex> xs) {
  Graph h = g;
  Vertex c = h.contract(xs);
  return {std::move(h), c};
}

std::vector<Vertex> second_neighborhood(const Graph& g, Vertex v) {
  auto nv = g.neighbors(v);
  std::vector<Vertex> out;
  for (Vertex u : nv)
    for (Vertex z : g.neighbors(u))
      if (z != v && !std::binary_search(nv.begin(), nv.end(), z)) out.push_back(z);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NeighborhoodStats neighborhood_stats(const Graph& g, Vertex v) {
  NeighborhoodStats s;
  auto nv = g.neighbors(v);
  s.degree = static_cast<int>(nv.size());
  s.max_degree = g.max_degree();
  s.neighbor_degrees.assign(static_cast<std::size_t>(s.max_degree) + 1, 0);

  int twice_inner = 0;
  for (Vertex u : nv) {
    ++s.neighbor_degrees[static_cast<std::size_t>(g.degree(u))];
    for (Vertex z : g.neighbors(u)) {
      if (z == v) continue;
      if (std::binary_search(nv.begin(), nv.end(), z))
        ++twice_inner;
      else
        ++s.outer_edges;
    }
  }
  s.inner_edges = twice_inner / 2;

  auto n2 = second_neighborhood(g, v);
  s.n2_size = static_cast<int>(n2.size());
  for (Vertex z : n2)
    if (g.degree(z) < s.max_degree) ++s.n2_low_degree;
  return s;
}

}  // namespace mis
