#pragma once

#include <array>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mis/graph.hpp"

namespace mis::analysis {

/// Degree weights for a level theta in {6, 7, 8}. w_0 = w_1 = w_2 = 0,
/// w_theta = 1, the free entries are w_3..w_{theta-1}, and above theta
/// w_i = 1 + (i - theta) * Δw_theta.
struct WeightVector {
  int theta = 6;
  std::vector<double> free;  ///< w_3..w_{theta-1}
  double sigma = 0.0;        ///< shift, used by the theta = 6 catalog only

  [[nodiscard]] double w(int i) const;
  /// Δw_i = w_i - w_{i-1}.
  [[nodiscard]] double delta(int i) const { return w(i) - w(i - 1); }
  [[nodiscard]] std::size_t num_free() const { return free.size() + 1; }  ///< weights plus sigma

  /// Published vectors; theta = 6 carries sigma = 0.10647.
  static WeightVector published(int theta);
  /// All free weights 1, sigma 0.
  static WeightVector uniform(int theta);
};

/// Linear combination of weights w_i (any i >= 0), sigma and a constant.
class Expr {
 public:
  Expr() = default;
  static Expr w(int i);
  static Expr dw(int i);  ///< w_i - w_{i-1}
  static Expr sigma();
  static Expr constant(double c);

  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  Expr& operator*=(double k);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(Expr a, double k) { return a *= k; }
  friend Expr operator*(double k, Expr a) { return a *= k; }

  [[nodiscard]] double eval(const WeightVector& wv) const;
  /// Σ|coefficient| over the weight and sigma terms.
  [[nodiscard]] double magnitude() const;

  /// Affine form over (w_3..w_{theta-1}, sigma): coefficients and constant.
  struct Affine {
    std::vector<double> coef;
    double constant = 0.0;
    [[nodiscard]] double eval(std::span<const double> x) const;
  };
  [[nodiscard]] Affine compile(int theta) const;

  [[nodiscard]] std::string str() const;

 private:
  std::map<int, double> w_;
  double sigma_ = 0.0;
  double c_ = 0.0;
};

struct Recurrence {
  std::string label;
  std::vector<double> decreases;
};

struct SymbolicRecurrence {
  std::string label;
  std::vector<Expr> decreases;
  [[nodiscard]] Recurrence eval(const WeightVector& wv) const;
};

/// Σ_v w_{δ(v)}.
double measure(const Graph& g, const WeightVector& wv);

/// Largest root of 1 - Σ x^{-d_i}: the smallest x > 1 with f(x) >= 0, found
/// by bisection until the bracket is below tol (or the doubles are adjacent).
double branching_factor(std::span<const double> decreases,
                        double tol = std::numeric_limits<double>::denorm_min());
double branching_factor(const Recurrence& r, double tol = std::numeric_limits<double>::denorm_min());

/// Corner pairs (p·a_i + c, p·b_i + d) for i = 1..ℓ.
template <class T>
std::vector<std::array<T, 2>> corner_pairs(std::span<const T> a, std::span<const T> b, const T& c, const T& d,
                                           int p) {
  if (a.size() != b.size()) throw std::invalid_argument("corner lists differ in length");
  if (a.empty()) throw std::invalid_argument("corner lists are empty");
  if (p < 0) throw std::invalid_argument("negative composition total");
  std::vector<std::array<T, 2>> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back({a[i] * static_cast<double>(p) + c,
                                                            b[i] * static_cast<double>(p) + d});
  return out;
}

std::vector<Recurrence> corner_recurrences(std::span<const double> a, std::span<const double> b, double c, double d,
                                           int p);

/// Alternatives for λ_theta(k); the effective value is their minimum.
/// k lists k_3..k_theta and must sum to theta.
std::vector<Expr> lambda_theta(int theta, std::span<const int> k);
double lambda_value(int theta, std::span<const int> k, const WeightVector& wv);

std::vector<SymbolicRecurrence> symbolic_catalog(int theta);
std::vector<Recurrence> catalog(int theta, const WeightVector& wv);

struct Constraint {
  std::string name;
  Expr lhs;  ///< feasible iff lhs >= -tolerance
  [[nodiscard]] double tolerance() const { return 5e-6 * lhs.magnitude(); }
};

std::vector<Constraint> weight_constraints(int theta);

struct ConstraintResult {
  std::string name;
  double value = 0.0;
  bool ok = false;
};

std::vector<ConstraintResult> check_constraints(const WeightVector& wv);
bool feasible(const WeightVector& wv);

struct CrossLevelCheck {
  int degree = 0;
  double factor = 0.0;  ///< base^(lower_j / w_j)
  bool ok = false;
};

/// Checks base^(lower[j-3] / w_j) <= target + slack for j = 3..theta-1.
std::vector<CrossLevelCheck> cross_level_constraints(const WeightVector& wv, double base,
                                                     std::span<const double> lower_weights, double target,
                                                     double slack = 1e-4);

struct LowerLevel {
  double base;
  std::vector<double> weights;  ///< w_3..w_{theta-1} of the level below
};
/// Lower-level data used by the published analysis of level theta.
LowerLevel published_lower_level(int theta);

/// Published bound for level theta.
double published_bound(int theta);

struct RecurrenceFactor {
  Recurrence recurrence;
  double factor = 0.0;
};

struct AnalysisReport {
  int theta = 0;
  WeightVector weights;
  std::vector<RecurrenceFactor> factors;
  std::string worst_label;
  double max_factor = 0.0;
  std::vector<ConstraintResult> constraints;
  std::vector<CrossLevelCheck> cross_level;
  [[nodiscard]] bool constraints_ok() const;
  [[nodiscard]] bool cross_level_ok() const;
};

AnalysisReport analyze(const WeightVector& wv, double target);

enum class SigmaMode { Fixed, Free };

struct OptimizeResult {
  WeightVector weights;
  double start_factor = 0.0;
  double max_factor = 0.0;
  int rounds = 0;
};

/// Coordinate-wise golden-section descent on max(catalog factors, cross-level
/// factors). Each coordinate is searched inside its feasible range and then
/// over [0, 1] with the other coordinates projected back onto the constraints.
/// Only improving moves are accepted, so the result never exceeds the start.
/// Throws std::invalid_argument on an infeasible start.
OptimizeResult optimize_weights(const WeightVector& initial, SigmaMode mode, int max_rounds = 12);

/// Same descent over a caller-supplied catalog, without cross-level terms.
OptimizeResult optimize_weights(const WeightVector& initial, SigmaMode mode,
                                std::span<const SymbolicRecurrence> recurrences, int max_rounds = 12);

}  // namespace mis::analysis
