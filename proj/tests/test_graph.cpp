#include "doctest.h"

#include <random>
#include <set>
#include <stdexcept>

#include "mis/generators.hpp"
#include "mis/graph.hpp"
#include "test_support.hpp"

using namespace mis;

TEST_CASE("delete_vertices examples") {
  Graph k3 = gen::complete(3);
  const Vertex one[] = {0};
  Graph k2 = delete_vertices(k3, one);
  CHECK(k2.num_vertices() == 2);
  CHECK(k2.num_edges() == 1);

  Graph p4 = delete_vertices(gen::cycle(5), one);
  CHECK(p4.num_vertices() == 4);
  CHECK(p4.num_edges() == 3);
  CHECK(p4.max_degree() == 2);
  CHECK(p4.min_degree() == 1);

  const Vertex ends[] = {0, 2};
  Graph b = delete_vertices(gen::path(3), ends);
  CHECK(b.vertices() == std::vector<Vertex>{1});
  CHECK(b.degree(1) == 0);

  const Vertex bad[] = {7};
  CHECK_THROWS_AS(delete_vertices(k3, bad), std::invalid_argument);
}

TEST_CASE("contract_set examples") {
  const Vertex all[] = {0, 1, 2};
  auto [p, c] = contract_set(gen::path(3), all);
  CHECK(p.num_vertices() == 1);
  CHECK(p.degree(c) == 0);
  CHECK(c == 3);

  const Vertex ac[] = {0, 2};
  auto [star, x] = contract_set(gen::cycle(4), ac);
  CHECK(star.num_vertices() == 3);
  CHECK(star.num_edges() == 2);
  CHECK(star.degree(x) == 2);
  CHECK(!star.adjacent(1, 3));

  const Vertex two[] = {1, 3};
  auto [k3, y] = contract_set(gen::complete(4), two);
  CHECK(k3.num_vertices() == 3);
  CHECK(k3.num_edges() == 3);

  CHECK_THROWS_AS(contract_set(gen::complete(4), std::span<const Vertex>{}), std::invalid_argument);
}

TEST_CASE("ids are stable and fresh") {
  Graph g = gen::cycle(6);
  g.remove_vertex(2);
  CHECK(g.contains(3));
  CHECK(!g.contains(2));
  const Vertex xs[] = {0, 1};
  Vertex c = g.contract(xs);
  CHECK(c == 6);
  Graph h = g.induced(g.vertices());
  CHECK(h.id_bound() == g.id_bound());
  CHECK(h.add_vertex() == 7);
  CHECK(g.add_vertex() == 7);
}

TEST_CASE("edge and vertex errors") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK(g.num_edges() == 1);
  CHECK_THROWS_AS((void)g.degree(-1), std::invalid_argument);
  g.remove_vertex(2);
  CHECK_THROWS_AS((void)g.neighbors(2), std::invalid_argument);
}

TEST_CASE("neighborhood_stats examples") {
  Graph pet = gen::petersen();
  for (Vertex v : pet.vertices()) {
    auto s = neighborhood_stats(pet, v);
    CHECK(s.degree == 3);
    CHECK(s.inner_edges == 0);
    CHECK(s.outer_edges == 6);
    CHECK(s.n2_size == 6);
    CHECK(s.k(3) == 3);
  }
  auto k7 = neighborhood_stats(gen::complete(7), 0);
  CHECK(k7.degree == 6);
  CHECK(k7.inner_edges == 15);
  CHECK(k7.outer_edges == 0);
  CHECK(k7.n2_size == 0);
  CHECK(k7.k(6) == 6);

  auto star = neighborhood_stats(gen::complete_bipartite(1, 4), 0);
  CHECK(star.degree == 4);
  CHECK(star.inner_edges == 0);
  CHECK(star.outer_edges == 0);
  CHECK(star.n2_size == 0);
  CHECK(star.k(1) == 4);
}

TEST_CASE("n2_low_degree counts against the current maximum degree") {
  // Path 0-1-2-3 plus a triangle on 3: max degree 3 at vertex 3.
  Graph g = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
  auto s = neighborhood_stats(g, 1);
  CHECK(s.max_degree == 3);
  CHECK(s.n2_size == 1);
  CHECK(s.n2_low_degree == 0);
  g.remove_vertex(5);
  s = neighborhood_stats(g, 1);
  CHECK(s.max_degree == 2);
  CHECK(s.n2_low_degree == 0);
  s = neighborhood_stats(g, 2);
  CHECK(s.n2_size == 2);
  CHECK(s.n2_low_degree == 2);
}

TEST_CASE("second_neighborhood examples") {
  CHECK(second_neighborhood(gen::cycle(6), 0) == std::vector<Vertex>{2, 4});
  CHECK(second_neighborhood(gen::complete(4), 1).empty());
  CHECK(second_neighborhood(gen::petersen(), 3).size() == 6);
}

TEST_CASE("stats match the matrix oracle and satisfy the degree-sum identity") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = oracle::random_graph(14, 0.1 + 0.02 * static_cast<double>(seed % 20), seed);
    for (Vertex v : g.vertices()) {
      auto s = neighborhood_stats(g, v);
      auto o = oracle::stats(g, v);
      REQUIRE(s.degree == o.degree);
      REQUIRE(s.inner_edges == o.inner);
      REQUIRE(s.outer_edges == o.outer);
      REQUIRE(s.n2_size == o.n2);
      int sum_k = 0, sum_ik = 0;
      for (int i = 0; i <= s.max_degree; ++i) {
        REQUIRE(s.k(i) == o.k[static_cast<std::size_t>(i)]);
        sum_k += s.k(i);
        sum_ik += i * s.k(i);
      }
      CHECK(sum_k == s.degree);
      CHECK(sum_ik == s.degree + 2 * s.inner_edges + s.outer_edges);
      CHECK(s.outer_edges >= s.n2_size);

      auto n2 = second_neighborhood(g, v);
      for (Vertex u : n2) {
        CHECK(u != v);
        CHECK(!g.adjacent(u, v));
        bool linked = false;
        for (Vertex w : g.neighbors(u)) linked = linked || g.adjacent(w, v);
        CHECK(linked);
      }
    }
  }
}

TEST_CASE("random delete and contract sequences keep the graph consistent") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 60; ++round) {
    Graph g = oracle::random_graph(16, 0.3, 1000 + static_cast<std::uint64_t>(round));
    std::set<Vertex> seen_ids;
    for (Vertex v : g.vertices()) seen_ids.insert(v);
    while (g.num_vertices() > 2) {
      auto vs = g.vertices();
      std::shuffle(vs.begin(), vs.end(), rng);
      if (rng() % 2 == 0) {
        g.remove_vertex(vs.front());
      } else {
        std::vector<Vertex> xs(vs.begin(), vs.begin() + 2 + static_cast<std::ptrdiff_t>(rng() % 2));
        std::set<Vertex> outside;
        for (Vertex x : xs)
          for (Vertex y : g.neighbors(x)) outside.insert(y);
        for (Vertex x : xs) outside.erase(x);
        Vertex c = g.contract(xs);
        CHECK(seen_ids.insert(c).second);
        auto nb = g.neighbors(c);
        CHECK(std::set<Vertex>(nb.begin(), nb.end()) == outside);
      }
      REQUIRE_NOTHROW(g.audit());
      int deg_sum = 0;
      for (Vertex v : g.vertices()) deg_sum += g.degree(v);
      CHECK(deg_sum == 2 * g.num_edges());
    }
  }
}

TEST_CASE("components are sorted and cover the graph") {
  Graph g = gen::disjoint_union(gen::cycle(4), gen::path(3));
  g.add_vertex();
  auto cs = g.components();
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(cs[1] == std::vector<Vertex>{4, 5, 6});
  CHECK(cs[2] == std::vector<Vertex>{7});
  CHECK(g.is_independent(std::vector<Vertex>{0, 2, 4, 6, 7}));
  CHECK(!g.is_independent(std::vector<Vertex>{0, 1}));
}
