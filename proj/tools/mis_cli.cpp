// mis: exact maximum independent set solver and branching-factor analysis.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "mis/analysis.hpp"
#include "mis/generators.hpp"
#include "mis/instance_io.hpp"
#include "mis/solver.hpp"

namespace {

using json = nlohmann::json;
using namespace mis;
namespace an = mis::analysis;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunReport {
  std::string instance;
  int alpha = 0;
  std::vector<Vertex> witness;  // 1-based
  long long branch_nodes = 0;
  double time_ms = 0.0;
  std::map<std::string, long long> reductions;
  bool timed_out = false;
};

json to_json(const RunReport& r) {
  json j;
  j["instance"] = r.instance;
  j["alpha"] = r.timed_out ? json(nullptr) : json(r.alpha);
  j["witness"] = r.witness;
  j["branch_nodes"] = r.branch_nodes;
  j["time_ms"] = r.time_ms;
  j["reductions"] = r.reductions;
  if (r.timed_out) j["timed_out"] = true;
  return j;
}

// Live ids of a parsed file are 0..n-1, so +1 gives the file's numbering.
RunReport run_solver(const std::string& name, const Graph& g, double timeout_s) {
  RunReport r;
  r.instance = name;
  SolverOptions opt;
  if (timeout_s > 0)
    opt.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(timeout_s));
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto sol = solve(g, opt);
    r.alpha = sol.size;
    for (Vertex v : sol.witness) r.witness.push_back(v + 1);
    r.branch_nodes = sol.stats.branch_nodes;
    r.reductions = sol.stats.reductions;
  } catch (const SolveTimeout&) {
    r.timed_out = true;
  }
  r.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void print_report(const RunReport& r, bool witness, bool stats) {
  if (r.timed_out) {
    std::cout << r.instance << ": timeout after " << r.time_ms << " ms\n";
    return;
  }
  std::cout << "alpha " << r.alpha << '\n';
  if (witness) {
    std::cout << "witness";
    for (Vertex v : r.witness) std::cout << ' ' << v;
    std::cout << '\n';
  }
  if (stats) {
    std::cout << "branch_nodes " << r.branch_nodes << '\n' << "time_ms " << r.time_ms << '\n';
    for (const auto& [k, v] : r.reductions) std::cout << "reduction " << k << ' ' << v << '\n';
  }
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string path;
  bool witness = false, stats = false, as_json = false;
  double timeout_s = 0;
};

int cmd_solve(const SolveArgs& a) {
  Graph g = io::read_instance(a.path);
  auto r = run_solver(a.path, g, a.timeout_s);
  if (a.as_json)
    std::cout << to_json(r).dump(2) << '\n';
  else
    print_report(r, a.witness, a.stats);
  return r.timed_out ? kExitFail : kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::vector<std::string> paths;
  int random = 0, n = 16;
  double p = 0.3;
  std::uint64_t seed = 1;
  bool certificate_only = false, inject_fault = false, quiet = false;
};

// Empty string on success, otherwise the reason.
std::string check_instance(const Graph& g, const VerifyArgs& a) {
  auto sol = solve(g);
  int claimed = sol.size + (a.inject_fault ? 1 : 0);
  if (!is_independent_set(g, sol.witness)) return "witness is not independent";
  if (static_cast<int>(sol.witness.size()) != claimed)
    return "witness size " + std::to_string(sol.witness.size()) + " != claimed " + std::to_string(claimed);
  if (a.certificate_only) return {};
  int alpha = brute_force_mis(g).first;
  if (alpha != claimed) return "solver " + std::to_string(claimed) + " != oracle " + std::to_string(alpha);
  return {};
}

int cmd_verify(const VerifyArgs& a) {
  std::vector<std::pair<std::string, Graph>> cases;
  for (const auto& p : a.paths) cases.emplace_back(p, io::read_instance(p));
  for (int i = 0; i < a.random; ++i) {
    const auto s = a.seed + static_cast<std::uint64_t>(i);
    cases.emplace_back("gnp(n=" + std::to_string(a.n) + ",seed=" + std::to_string(s) + ")", gen::gnp(a.n, a.p, s));
  }
  if (cases.empty()) throw std::invalid_argument("nothing to verify: give files or --random");
  if (!a.certificate_only)
    for (const auto& [name, g] : cases)
      if (g.num_vertices() > 32)
        throw std::invalid_argument(name + " has " + std::to_string(g.num_vertices()) +
                                    " vertices; the oracle handles at most 32 (use --certificate-only)");
  int failed = 0;
  for (const auto& [name, g] : cases) {
    auto why = check_instance(g, a);
    if (!why.empty()) {
      ++failed;
      std::cout << "FAIL " << name << ": " << why << '\n';
    } else if (!a.quiet) {
      std::cout << "ok   " << name << '\n';
    }
  }
  std::cout << (failed ? "FAIL" : "PASS") << ' ' << cases.size() - static_cast<std::size_t>(failed) << '/'
            << cases.size() << '\n';
  return failed ? kExitFail : kExitOk;
}

// ---------------------------------------------------------------- analyze

an::WeightVector read_weights(const std::string& path, int theta) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  // Without a sigma line the published shift applies.
  an::WeightVector wv{theta, std::vector<double>(static_cast<std::size_t>(theta - 3), -1.0),
                      an::WeightVector::published(theta).sigma};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string key;
    double value = 0;
    if (!(ls >> key)) continue;
    if (!(ls >> value)) throw io::ParseError(lineno, "expected '<name> <value>'");
    if (key == "sigma") {
      wv.sigma = value;
    } else if (key.size() >= 2 && key[0] == 'w') {
      int i = std::stoi(key.substr(1));
      if (i < 3 || i >= theta) throw io::ParseError(lineno, key + " is not a free weight at level " + std::to_string(theta));
      wv.free[static_cast<std::size_t>(i - 3)] = value;
    } else {
      throw io::ParseError(lineno, "unknown key '" + key + "'");
    }
  }
  for (std::size_t i = 0; i < wv.free.size(); ++i)
    if (wv.free[i] < 0) throw std::invalid_argument("weights file lacks w" + std::to_string(i + 3));
  return wv;
}

struct AnalyzeArgs {
  int theta = 6;
  std::string weights;
  double sigma = -1;
  bool optimize = false, as_json = false, all = false;
  double target = 0;
};

int cmd_analyze(const AnalyzeArgs& a) {
  auto wv = a.weights.empty() ? an::WeightVector::published(a.theta) : read_weights(a.weights, a.theta);
  if (a.sigma >= 0) wv.sigma = a.sigma;
  const double target = a.target > 0 ? a.target : an::published_bound(a.theta) + 1e-4;

  auto constraints = an::check_constraints(wv);
  bool cons_ok = std::all_of(constraints.begin(), constraints.end(), [](const auto& c) { return c.ok; });
  std::optional<an::OptimizeResult> opt;
  if (a.optimize && cons_ok) {
    opt = an::optimize_weights(wv, an::SigmaMode::Free);
    wv = opt->weights;
  }
  auto rep = an::analyze(wv, target);
  const bool bound_ok = rep.max_factor <= target;

  if (a.as_json) {
    json j;
    j["theta"] = a.theta;
    j["weights"] = wv.free;
    j["sigma"] = wv.sigma;
    j["max_factor"] = rep.max_factor;
    j["worst_label"] = rep.worst_label;
    j["target"] = target;
    for (const auto& c : rep.constraints) j["constraints"].push_back({{"name", c.name}, {"value", c.value}, {"ok", c.ok}});
    for (const auto& c : rep.cross_level)
      j["cross_level"].push_back({{"degree", c.degree}, {"factor", c.factor}, {"ok", c.ok}});
    for (const auto& f : rep.factors)
      j["recurrences"].push_back({{"label", f.recurrence.label}, {"decreases", f.recurrence.decreases}, {"factor", f.factor}});
    if (opt) j["optimizer"] = {{"start_factor", opt->start_factor}, {"rounds", opt->rounds}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::printf("level %d weights", a.theta);
    for (std::size_t i = 0; i < wv.free.size(); ++i) std::printf(" w%zu=%.5f", i + 3, wv.free[i]);
    if (a.theta == 6) std::printf(" sigma=%.5f", wv.sigma);
    std::printf("\n");
    if (opt) std::printf("optimizer: %.6f -> %.6f in %d rounds\n", opt->start_factor, opt->max_factor, opt->rounds);
    auto sorted = rep.factors;
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.factor > y.factor; });
    const std::size_t shown = a.all ? sorted.size() : std::min<std::size_t>(sorted.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) std::printf("  %.6f  %s\n", sorted[i].factor, sorted[i].recurrence.label.c_str());
    for (const auto& c : rep.constraints)
      if (!c.ok) std::printf("constraint violated: %s (%.6g)\n", c.name.c_str(), c.value);
    for (const auto& c : rep.cross_level)
      std::printf("cross-level degree %d: %.6f %s\n", c.degree, c.factor, c.ok ? "ok" : "VIOLATED");
    std::printf("recurrences %zu\nmax factor %.6f (%s)\ntarget %.6f %s\n", rep.factors.size(), rep.max_factor,
                rep.worst_label.c_str(), target, bound_ok ? "met" : "missed");
  }
  if (!rep.constraints_ok()) return kExitUsage;
  return bound_ok && rep.cross_level_ok() ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<std::string> paths;
  int jobs = 1;
  double timeout_s = 0;
  bool as_json = false;
};

int cmd_bench(const BenchArgs& a) {
  if (a.jobs < 1) throw std::invalid_argument("--jobs must be at least 1");
  std::vector<RunReport> reports(a.paths.size());
  std::vector<std::string> errors(a.paths.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < a.paths.size();) {
      try {
        reports[i] = run_solver(a.paths[i], io::read_instance(a.paths[i]), a.timeout_s);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < a.jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int status = kExitOk;
  json all = json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (!errors[i].empty()) {
      std::cerr << a.paths[i] << ": " << errors[i] << '\n';
      status = kExitUsage;
      continue;
    }
    if (reports[i].timed_out) status = std::max(status, kExitFail);
    if (a.as_json) {
      all.push_back(to_json(reports[i]));
    } else if (reports[i].timed_out) {
      std::printf("%-40s timeout\n", reports[i].instance.c_str());
    } else {
      std::printf("%-40s alpha=%-5d nodes=%-9lld %.2f ms\n", reports[i].instance.c_str(), reports[i].alpha,
                  reports[i].branch_nodes, reports[i].time_ms);
    }
  }
  if (a.as_json) std::cout << all.dump(2) << '\n';
  return status;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string kind;
  int n = 0;
  std::uint64_t seed = 1;
  double p = 0.3;
  std::string format = "dimacs", output;
};

int cmd_gen(const GenArgs& a) {
  Graph g;
  if (a.kind == "gnp") {
    g = gen::gnp(a.n, a.p, a.seed);
  } else if (a.kind == "cycle") {
    g = gen::cycle(a.n);
  } else if (a.kind == "line-of-complete") {
    g = gen::line_graph(gen::complete(a.n));
  } else if (a.kind.rfind("regular-", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(a.kind.substr(8));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad kind '" + a.kind + "'");
    }
    g = gen::random_regular(a.n, k, a.seed);
  } else {
    throw std::invalid_argument("unknown kind '" + a.kind + "' (gnp, regular-K, cycle, line-of-complete)");
  }
  std::string text;
  if (a.format == "dimacs")
    text = io::write_dimacs(g, a.kind + " n=" + std::to_string(a.n) + " seed=" + std::to_string(a.seed));
  else if (a.format == "adjacency")
    text = io::write_adjacency(g);
  else
    throw std::invalid_argument("unknown format '" + a.format + "'");
  if (a.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(a.output);
    if (!out) throw std::runtime_error("cannot write " + a.output);
    out << text;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact maximum independent set solver and branching-factor analysis"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("file", sa.path, "DIMACS or adjacency-list file")->required();
  solve_cmd->add_flag("--witness", sa.witness, "Print the independent set (1-based ids)");
  solve_cmd->add_flag("--stats", sa.stats, "Print search statistics");
  solve_cmd->add_flag("--json", sa.as_json, "Emit a JSON run report");
  solve_cmd->add_option("--timeout-s", sa.timeout_s, "Stop after this many seconds");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Compare the solver against the exhaustive oracle");
  verify_cmd->add_option("files", va.paths, "Instance files");
  verify_cmd->add_option("--random", va.random, "Number of random G(n,p) instances");
  verify_cmd->add_option("--n", va.n, "Vertices per random instance");
  verify_cmd->add_option("--p", va.p, "Edge probability of random instances");
  verify_cmd->add_option("--seed", va.seed, "First seed");
  verify_cmd->add_flag("--certificate-only", va.certificate_only, "Only check the witness");
  verify_cmd->add_flag("--inject-fault", va.inject_fault, "Report alpha+1 to exercise the failure path");
  verify_cmd->add_flag("--quiet", va.quiet, "Only print failures and the summary");

  AnalyzeArgs aa;
  auto* analyze_cmd = app.add_subcommand("analyze", "Branching-factor analysis for level 6, 7 or 8");
  analyze_cmd->add_option("theta", aa.theta, "Level")->required()->check(CLI::Range(6, 8));
  analyze_cmd->add_option("--weights", aa.weights, "Weights file ('w3 0.5' and 'sigma 0.1' lines)");
  analyze_cmd->add_option("--sigma", aa.sigma, "Shift for level 6");
  analyze_cmd->add_flag("--optimize", aa.optimize, "Improve the weights by coordinate descent");
  analyze_cmd->add_option("--target", aa.target, "Bound to meet (default: published bound + 1e-4)");
  analyze_cmd->add_flag("--json", aa.as_json, "Emit the full report as JSON");
  analyze_cmd->add_flag("--all", aa.all, "List every recurrence");

  BenchArgs ba;
  auto* bench_cmd = app.add_subcommand("bench", "Solve a batch of instances");
  bench_cmd->add_option("files", ba.paths, "Instance files")->required();
  bench_cmd->add_option("--jobs", ba.jobs, "Worker threads");
  bench_cmd->add_option("--timeout-s", ba.timeout_s, "Per-instance time limit");
  bench_cmd->add_flag("--json", ba.as_json, "Emit JSON run reports");

  GenArgs ga;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("kind", ga.kind, "gnp, regular-K, cycle or line-of-complete")->required();
  gen_cmd->add_option("n", ga.n, "Vertex count (clique size for line-of-complete)")->required();
  gen_cmd->add_option("--seed", ga.seed, "Random seed");
  gen_cmd->add_option("--p", ga.p, "Edge probability for gnp");
  gen_cmd->add_option("--format", ga.format, "dimacs or adjacency");
  gen_cmd->add_option("-o,--output", ga.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(sa);
    if (*verify_cmd) return cmd_verify(va);
    if (*analyze_cmd) return cmd_analyze(aa);
    if (*bench_cmd) return cmd_bench(ba);
    if (*gen_cmd) return cmd_gen(ga);
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
