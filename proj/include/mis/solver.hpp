#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mis/graph.hpp"
#include "mis/reductions.hpp"

namespace mis {

struct SearchStats {
  long long branch_nodes = 0;
  int max_depth = 0;
  /// Applied reduction steps per rule name (see event_name).
  std::map<std::string, long long> reductions;
  /// Branching decisions per selector ("vertex-high-9", "short-edge-7",
  /// "optimal-6-clause-3", "fallback", ...).
  std::map<std::string, long long> selectors;
};

struct Solution {
  int size = 0;
  std::vector<Vertex> witness;  ///< ids of the input graph, ascending
  SearchStats stats;
};

/// Search levels: 9 is the general algorithm, 8/7/6 the bounded-degree
/// algorithms and 5 the generic low-degree fallback.
inline constexpr int kGeneralLevel = 9;
inline constexpr int kFallbackLevel = 5;

struct SolverOptions {
  /// Every reduce step of every search node.
  std::function<void(int level, const Graph& before, const Graph& after, const TraceEvent& event)> on_reduce;
  /// Every branch child, before it is reduced.
  std::function<void(int level, const Graph& parent, const Graph& child)> on_branch;
  /// Checked between search nodes.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

class SolveTimeout : public std::runtime_error {
 public:
  SolveTimeout() : std::runtime_error("solve deadline exceeded") {}
};

/// Maximum independent set with a witness in the ids of g.
Solution solve(const Graph& g, const SolverOptions& options = {});

/// Runs the search from level theta (6, 7 or 8).
Solution mis_theta(const Graph& g, int theta, const SolverOptions& options = {});

/// Reduce plus vertex branching on a maximum-degree vertex.
Solution fallback_low_degree(const Graph& g, const SolverOptions& options = {});

/// Exhaustive oracle for at most 32 vertices; larger inputs are rejected
/// with std::invalid_argument.
std::pair<int, std::vector<Vertex>> brute_force_mis(const Graph& g);

/// Independent, duplicate-free and made of live vertices.
bool is_independent_set(const Graph& g, std::span<const Vertex> xs);

}  // namespace mis
