#include "doctest.h"

#include <chrono>
#include <stdexcept>

#include "mis/generators.hpp"
#include "mis/solver.hpp"
#include "test_support.hpp"

using namespace mis;

namespace {

void check_solution(const Graph& g, const Solution& s) {
  CHECK(is_independent_set(g, s.witness));
  CHECK(static_cast<int>(s.witness.size()) == s.size);
  CHECK(std::is_sorted(s.witness.begin(), s.witness.end()));
}

}  // namespace

TEST_CASE("solve examples") {
  CHECK(solve(gen::cycle(5)).size == 2);
  CHECK(solve(gen::petersen()).size == 4);
  auto k12 = solve(gen::complete(12));
  CHECK(k12.size == 1);
  check_solution(gen::complete(12), k12);
  CHECK(solve(Graph()).size == 0);
  CHECK(solve(Graph(4)).size == 4);
}

TEST_CASE("brute_force_mis examples") {
  CHECK(brute_force_mis(gen::complete(5)).first == 1);
  CHECK(brute_force_mis(gen::cycle(7)).first == 3);
  auto [a, w] = brute_force_mis(gen::petersen());
  CHECK(a == 4);
  CHECK(is_independent_set(gen::petersen(), w));
  CHECK_THROWS_AS(brute_force_mis(gen::cycle(33)), std::invalid_argument);
}

TEST_CASE("is_independent_set rejects duplicates and dead ids") {
  Graph g = gen::path(4);
  CHECK(is_independent_set(g, std::vector<Vertex>{0, 2}));
  CHECK(!is_independent_set(g, std::vector<Vertex>{0, 0}));
  CHECK(!is_independent_set(g, std::vector<Vertex>{0, 1}));
  CHECK(!is_independent_set(g, std::vector<Vertex>{9}));
}

TEST_CASE("mis_theta examples") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = oracle::random_graph(12 + static_cast<int>(seed % 9), 0.15, seed);
    while (g.max_degree() > 5) g.remove_vertex(g.vertices()[0]);
    auto s = mis_theta(g, 6);
    check_solution(g, s);
    CHECK(s.size == oracle::alpha(g));
  }

  Graph mixed = gen::disjoint_union(gen::line_graph(gen::complete(5)), gen::cycle(5));
  auto m = mis_theta(mixed, 6);
  CHECK(m.size == 4);
  CHECK(m.stats.selectors.empty());

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Graph r6 = gen::random_regular(14, 6, seed);
    auto s = mis_theta(r6, 6);
    check_solution(r6, s);
    CHECK(s.size == oracle::alpha(r6));
  }
  CHECK_THROWS_AS(mis_theta(gen::cycle(5), 9), std::invalid_argument);
}

TEST_CASE("fallback_low_degree examples") {
  CHECK(fallback_low_degree(Graph()).size == 0);
  Graph d = gen::dodecahedron();
  CHECK(d.max_degree() == 3);
  CHECK(d.min_degree() == 3);
  CHECK(fallback_low_degree(d).size == oracle::alpha(d));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Graph r4 = gen::random_regular(14, 4, seed);
    auto s = fallback_low_degree(r4);
    check_solution(r4, s);
    CHECK(s.size == oracle::alpha(r4));
  }
}

TEST_CASE("solve agrees with both oracles on random graphs") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const double ps[] = {0.1, 0.2, 0.3, 0.5};
    Graph g = oracle::random_graph(8 + static_cast<int>(seed % 17), ps[seed % 4], seed);
    auto s = solve(g);
    check_solution(g, s);
    const int a = oracle::alpha(g);
    REQUIRE(s.size == a);
    CHECK(brute_force_mis(g).first == a);
  }
}

TEST_CASE("every level is exact on dense and regular inputs") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    Graph g = gen::random_regular(20, 5 + static_cast<int>(seed % 6), seed);
    const int a = oracle::alpha(g);
    CHECK(solve(g).size == a);
    for (int theta = 6; theta <= 8; ++theta) CHECK(mis_theta(g, theta).size == a);
    CHECK(fallback_low_degree(g).size == a);
  }
}

TEST_CASE("high-degree, short-edge and optimal-vertex selectors all fire") {
  std::map<std::string, long long> seen;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = seed % 2 ? oracle::random_graph(26, 0.35, seed) : gen::random_regular(24, 6 + static_cast<int>(seed % 3), seed);
    auto s = solve(g);
    CHECK(s.size == oracle::alpha(g));
    for (const auto& [k, v] : s.stats.selectors) seen[k] += v;
  }
  CHECK(seen.count("vertex-high-9") == 1);
  bool short_edge = false, optimal = false;
  for (const auto& [k, v] : seen) {
    short_edge = short_edge || k.rfind("short-edge-", 0) == 0;
    optimal = optimal || k.rfind("optimal-", 0) == 0;
  }
  CHECK(short_edge);
  CHECK(optimal);
}

TEST_CASE("solutions are deterministic") {
  Graph g = oracle::random_graph(28, 0.3, 5);
  auto a = solve(g), b = solve(g);
  CHECK(a.witness == b.witness);
  CHECK(a.stats.branch_nodes == b.stats.branch_nodes);
  CHECK(a.stats.reductions == b.stats.reductions);
  CHECK(a.stats.selectors == b.stats.selectors);
}

TEST_CASE("an expired deadline raises SolveTimeout") {
  SolverOptions opt;
  opt.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK_THROWS_AS(solve(gen::petersen(), opt), SolveTimeout);
}

TEST_CASE("witness ids survive contraction and component splitting") {
  Graph g = gen::disjoint_union(gen::disjoint_union(gen::petersen(), gen::path(3)), gen::complete_bipartite(2, 3));
  g.remove_vertex(3);
  auto s = solve(g);
  check_solution(g, s);
  CHECK(s.size == oracle::alpha(g));
}
