#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "mis/graph.hpp"

namespace mis::gen {

/// Seeded 64-bit engine with platform-independent conversions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

Graph gnp(int n, double p, std::uint64_t seed);

/// Simple k-regular graph by stub pairing restricted to admissible pairs,
/// restarting on a dead end. n·k odd is a usage error.
Graph random_regular(int n, int k, std::uint64_t seed, int max_attempts = 200000);

/// Simple bipartite graph with na vertices of degree da and nb of degree db.
Graph random_biregular(int na, int da, int nb, int db, std::uint64_t seed, int max_attempts = 200000);

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(std::span<const int> parts);
Graph hypercube(int dim);
Graph petersen();
Graph dodecahedron();

/// Line graph; vertex i is the i-th edge of g.edges().
Graph line_graph(const Graph& g);

/// Disjoint union; vertices of b are shifted by a.id_bound().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace mis::gen
