#include "mis/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

namespace mis::analysis {

namespace {

void require_theta(int theta) {
  if (theta < 6 || theta > 8) throw std::invalid_argument("theta must be 6, 7 or 8");
}

std::string fmt(const char* f, auto... xs) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, xs...);
  return buf;
}

Expr W(int i) { return Expr::w(i); }
Expr D(int i) { return Expr::dw(i); }

// Degree-theta vertex family: (w_θ + Σ k_i Δw_i, w_θ + Σ k_i w_i + λ) for
// every k, using corner pairs over the non-θ neighbors.
void degree_theta_family(int theta, std::vector<SymbolicRecurrence>& out) {
  std::vector<Expr> a, b;
  for (int i = 3; i < theta; ++i) {
    a.push_back(D(i));
    b.push_back(W(i));
  }
  for (int kt = 0; kt <= theta; ++kt) {
    const int p = theta - kt;
    const Expr c = W(theta) + static_cast<double>(kt) * D(theta);
    const Expr base_d = W(theta) + static_cast<double>(kt) * W(theta);
    if (p == 0) {
      std::vector<int> k(static_cast<std::size_t>(theta - 2), 0);
      k.back() = theta;
      for (const auto& lam : lambda_theta(theta, k))
        out.push_back({fmt("degree-%d k%d=%d", theta, theta, kt), {c, base_d + lam}});
      continue;
    }
    // λ may depend on which lower degree is present; evaluate it per corner.
    for (int i = 3; i < theta; ++i) {
      std::vector<int> k(static_cast<std::size_t>(theta - 2), 0);
      k[static_cast<std::size_t>(i - 3)] = p;
      k.back() = kt;
      for (const auto& lam : lambda_theta(theta, k)) {
        auto pairs = corner_pairs<Expr>(std::span<const Expr>(&a[static_cast<std::size_t>(i - 3)], 1),
                                        std::span<const Expr>(&b[static_cast<std::size_t>(i - 3)], 1), c,
                                        base_d + lam, p);
        out.push_back({fmt("degree-%d k%d=%d corner k%d=%d", theta, theta, kt, i, p), {pairs[0][0], pairs[0][1]}});
      }
    }
  }
}

std::vector<SymbolicRecurrence> catalog6() {
  std::vector<SymbolicRecurrence> r;
  const Expr s = Expr::sigma();
  for (int i = 3; i <= 7; ++i)
    r.push_back({fmt("high-degree i=%d", i), {W(7) + 7 * D(i) - s, W(7) + 7 * W(i) + 12 * D(6) - s}});
  for (int i = 4; i <= 6; ++i)
    r.push_back({fmt("edge K2,4 i=%d", i), {2 * W(6) + 4 * (W(i) - W(i - 2)) + 2 * D(6), 2 * W(6) + 4 * W(i) + 4 * D(6)}});
  r.push_back({"edge K2,4 i=3", {2 * W(6) + 8 * W(3) + 2 * D(6), 2 * W(6) + 4 * W(3) + 4 * D(6)}});
  for (int i = 4; i <= 6; ++i) {
    const double p = i == 6 ? 4 : 0;
    for (int j = 3; j <= 6; ++j) {
      if (i == 6 && j == 6) {
        r.push_back({"edge K2,3 deg4 i=6 j=6 shifted",
                     {W(6) + W(5) + 3 * (W(6) - W(4)) + 3 * D(6), 4 * W(6) + W(5) + 5 * D(6) + s}});
        continue;
      }
      r.push_back({fmt("edge K2,3 deg4 i=%d j=%d", i, j),
                   {W(6) + W(5) + 3 * (W(i) - W(i - 2)) + 2 * D(6) + D(j),
                    W(6) + W(5) + 3 * W(i) + (3 + p) * D(6) - (W(j + 1) - W(j))}});
    }
  }
  for (int j = 3; j <= 6; ++j)
    r.push_back({fmt("edge K2,3 deg4 i=3 j=%d", j),
                 {W(6) + W(5) + 6 * W(3) + 2 * D(6) + D(j), W(6) + W(5) + 3 * W(3) + 3 * D(6) - (W(j + 1) - W(j))}});
  for (int i = 4; i <= 6; ++i) {
    const double p = i >= 5 ? 3 : 0;
    for (int j = 3; j <= 6; ++j) {
      if (i == 6 && j == 6) {
        r.push_back({"edge 66 K2,3 i=6 j=6 shifted", {2 * W(6) + 3 * (W(6) - W(4)) + 4 * D(6), 5 * W(6) + 2 * D(6) + s}});
        continue;
      }
      r.push_back({fmt("edge 66 K2,3 i=%d j=%d", i, j),
                   {2 * W(6) + 3 * (W(i) - W(i - 2)) + 4 * D(j),
                    2 * W(6) + 3 * W(i) + (3 + p) * D(6) - 4 * (W(j + 1) - W(j))}});
    }
  }
  for (int j = 3; j <= 6; ++j)
    r.push_back({fmt("edge 66 K2,3 i=3 j=%d", j),
                 {2 * W(6) + 6 * W(3) + 4 * D(j), 2 * W(6) + 3 * W(3) + 3 * D(6) - 4 * (W(j + 1) - W(j))}});

  // Degree-6 vertices: every neighbor-degree vector in full.
  for (int k3 = 0; k3 <= 6; ++k3)
    for (int k4 = 0; k3 + k4 <= 6; ++k4)
      for (int k5 = 0; k3 + k4 + k5 <= 6; ++k5) {
        const int k6 = 6 - k3 - k4 - k5;
        const int k[] = {k3, k4, k5, k6};
        const Expr a = W(6) + k3 * W(3) + k4 * D(4) + k5 * D(5) + k6 * D(6);
        const Expr b0 = W(6) + k3 * W(3) + k4 * W(4) + k5 * W(5) + k6 * W(6);
        const auto lams = lambda_theta(6, k);
        for (std::size_t t = 0; t < lams.size(); ++t)
          r.push_back({fmt("degree-6 k=(%d,%d,%d,%d)%s", k3, k4, k5, k6, t ? " alt" : ""), {a, b0 + lams[t]}});
      }
  return r;
}

std::vector<SymbolicRecurrence> catalog7() {
  std::vector<SymbolicRecurrence> r;
  for (int i = 3; i <= 8; ++i)
    r.push_back({fmt("high-degree i=%d", i), {W(8) + 8 * D(i), W(8) + 8 * W(i) + 14 * D(7)}});
  for (int i = 4; i <= 7; ++i)
    r.push_back({fmt("edge K2,5 i=%d", i), {2 * W(7) + 5 * (W(i) - W(i - 2)) + 2 * D(7), 2 * W(7) + 5 * W(i) + 4 * D(7)}});
  r.push_back({"edge K2,5 i=3", {2 * W(7) + 10 * W(3) + 2 * D(7), 2 * W(7) + 5 * W(3) + 4 * D(7)}});
  for (int i = 4; i <= 7; ++i) {
    const double p = i == 7 ? 4 : 0;
    for (int j = 3; j <= 7; ++j)
      r.push_back({fmt("edge 77 K2,4 i=%d j=%d", i, j),
                   {2 * W(7) + 4 * (W(i) - W(i - 2)) + 4 * D(j),
                    2 * W(7) + 4 * W(i) + (4 + p) * D(7) - 4 * (W(j + 1) - W(j))}});
  }
  for (int j = 3; j <= 7; ++j)
    r.push_back({fmt("edge 77 K2,4 i=3 j=%d", j),
                 {2 * W(7) + 8 * W(3) + 4 * D(j), 2 * W(7) + 4 * W(3) + 4 * D(7) - 4 * (W(j + 1) - W(j))}});
  degree_theta_family(7, r);
  return r;
}

std::vector<SymbolicRecurrence> catalog8() {
  std::vector<SymbolicRecurrence> r;
  for (int i = 3; i <= 9; ++i)
    r.push_back({fmt("high-degree i=%d", i), {W(9) + 9 * D(i), W(9) + 9 * W(i) + 16 * D(8)}});
  for (int i = 3; i <= 7; ++i)
    r.push_back({fmt("edge K2,6 i=%d", i), {2 * W(8) + 6 * (W(i) - W(i - 2)) + 2 * D(8), 2 * W(8) + 6 * W(i) + 2 * D(8)}});
  for (int i = 4; i <= 8; ++i) {
    const double p = i == 8 ? 5 : 0;
    for (int j = 3; j <= 8; ++j)
      r.push_back({fmt("edge 88 K2,5 i=%d j=%d", i, j),
                   {2 * W(8) + 5 * (W(i) - W(i - 2)) + 4 * D(j),
                    2 * W(8) + 5 * W(i) + (5 + p) * D(8) - 4 * (W(j + 1) - W(j))}});
  }
  for (int j = 3; j <= 8; ++j)
    r.push_back({fmt("edge 88 K2,5 i=3 j=%d", j),
                 {2 * W(8) + 10 * W(3) + 4 * D(j), 2 * W(8) + 5 * W(3) + 4 * D(7) - 4 * (W(j + 1) - W(j))}});
  for (int i = 4; i <= 8; ++i) {
    const double p = i == 8 ? 8 : i == 7 ? 4 : 0;
    for (int j = 3; j <= 8; ++j)
      r.push_back({fmt("edge 88 K3,4 i=%d j=%d", i, j),
                   {2 * W(8) + 4 * (W(i) - W(i - 2)) + 6 * D(j),
                    2 * W(8) + 4 * W(i) + (4 + p) * D(8) - 6 * (W(j + 1) - W(j))}});
  }
  for (int j = 3; j <= 8; ++j)
    r.push_back({fmt("edge 88 K3,4 i=3 j=%d", j),
                 {2 * W(8) + 8 * W(3) + 6 * D(j), 2 * W(8) + 4 * W(3) + 4 * D(7) - 6 * (W(j + 1) - W(j))}});
  degree_theta_family(8, r);
  return r;
}

double cross_term(double base, double lower, double w) { return std::pow(base, lower / w); }

}  // namespace

// ---------------------------------------------------------------- weights

double WeightVector::w(int i) const {
  require_theta(theta);
  if (free.size() != static_cast<std::size_t>(theta - 3))
    throw std::invalid_argument(fmt("level %d needs %d free weights", theta, theta - 3));
  if (i < 0) throw std::invalid_argument("negative degree");
  if (i <= 2) return 0.0;
  if (i < theta) return free[static_cast<std::size_t>(i - 3)];
  const double top_delta = 1.0 - free.back();
  return 1.0 + (i - theta) * top_delta;
}

WeightVector WeightVector::published(int theta) {
  require_theta(theta);
  switch (theta) {
    case 6: return {6, {0.49969, 0.76163, 0.92401}, 0.10647};
    case 7: return {7, {0.65077, 0.78229, 0.89060, 0.96384}, 0.0};
    default: return {8, {0.65844, 0.78844, 0.88027, 0.95345, 0.98839}, 0.0};
  }
}

WeightVector WeightVector::uniform(int theta) {
  require_theta(theta);
  return {theta, std::vector<double>(static_cast<std::size_t>(theta - 3), 1.0), 0.0};
}

// ---------------------------------------------------------------- Expr

Expr Expr::w(int i) {
  if (i < 0) throw std::invalid_argument("negative degree");
  Expr e;
  e.w_[i] = 1.0;
  return e;
}

Expr Expr::dw(int i) {
  if (i < 1) throw std::invalid_argument("Δw needs a degree of at least 1");
  return w(i) - w(i - 1);
}

Expr Expr::sigma() {
  Expr e;
  e.sigma_ = 1.0;
  return e;
}

Expr Expr::constant(double c) {
  Expr e;
  e.c_ = c;
  return e;
}

Expr& Expr::operator+=(const Expr& o) {
  for (auto [i, k] : o.w_) w_[i] += k;
  sigma_ += o.sigma_;
  c_ += o.c_;
  return *this;
}

Expr& Expr::operator-=(const Expr& o) {
  for (auto [i, k] : o.w_) w_[i] -= k;
  sigma_ -= o.sigma_;
  c_ -= o.c_;
  return *this;
}

Expr& Expr::operator*=(double k) {
  for (auto& [i, x] : w_) x *= k;
  sigma_ *= k;
  c_ *= k;
  return *this;
}

double Expr::eval(const WeightVector& wv) const {
  double v = c_ + sigma_ * wv.sigma;
  for (auto [i, k] : w_)
    if (k != 0.0) v += k * wv.w(i);
  return v;
}

double Expr::magnitude() const {
  double m = std::abs(sigma_);
  for (auto [i, k] : w_) m += std::abs(k);
  return m;
}

double Expr::Affine::eval(std::span<const double> x) const {
  double v = constant;
  for (std::size_t i = 0; i < coef.size(); ++i) v += coef[i] * x[i];
  return v;
}

Expr::Affine Expr::compile(int theta) const {
  require_theta(theta);
  Affine a;
  const std::size_t nw = static_cast<std::size_t>(theta - 3);
  a.coef.assign(nw + 1, 0.0);
  a.constant = c_;
  a.coef[nw] = sigma_;
  for (auto [i, k] : w_) {
    if (i <= 2) continue;
    if (i < theta) {
      a.coef[static_cast<std::size_t>(i - 3)] += k;
    } else {
      // 1 + (i - θ)(1 - w_{θ-1})
      a.constant += k * (1.0 + (i - theta));
      a.coef[nw - 1] -= k * (i - theta);
    }
  }
  return a;
}

std::string Expr::str() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](double k, const std::string& name) {
    if (k == 0.0) return;
    if (!first) os << (k < 0 ? " - " : " + ");
    else if (k < 0) os << "-";
    double m = std::abs(k);
    if (m != 1.0 || name.empty()) os << m;
    os << name;
    first = false;
  };
  for (auto [i, k] : w_) term(k, "w" + std::to_string(i));
  term(sigma_, "σ");
  term(c_, "");
  if (first) os << "0";
  return os.str();
}

Recurrence SymbolicRecurrence::eval(const WeightVector& wv) const {
  Recurrence r{label, {}};
  for (const auto& e : decreases) r.decreases.push_back(e.eval(wv));
  return r;
}

// ---------------------------------------------------------------- factors

double measure(const Graph& g, const WeightVector& wv) {
  double m = 0.0;
  for (Vertex v : g.vertices()) m += wv.w(g.degree(v));
  return m;
}

double branching_factor(std::span<const double> decreases, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (decreases.empty()) throw std::invalid_argument("recurrence has no branches");
  for (double d : decreases)
    if (!(d > 0.0)) throw std::invalid_argument("measure decreases must be positive");
  auto f = [&](double x) {
    double s = 0.0;
    for (double d : decreases) s += std::pow(x, -d);
    return 1.0 - s;
  };
  double lo = 1.0 + 1e-12, hi = 4.0;
  if (f(lo) >= 0.0) return lo;
  while (f(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw std::domain_error("branching factor overflows");
  }
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    if (f(mid) >= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

double branching_factor(const Recurrence& r, double tol) { return branching_factor(r.decreases, tol); }

std::vector<Recurrence> corner_recurrences(std::span<const double> a, std::span<const double> b, double c, double d,
                                           int p) {
  auto pairs = corner_pairs<double>(a, b, c, d, p);
  std::vector<Recurrence> out;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out.push_back({fmt("corner %zu", i + 1), {pairs[i][0], pairs[i][1]}});
  return out;
}

std::vector<Expr> lambda_theta(int theta, std::span<const int> k) {
  require_theta(theta);
  if (k.size() != static_cast<std::size_t>(theta - 2))
    throw std::invalid_argument(fmt("level %d needs %d neighbor counts", theta, theta - 2));
  for (int x : k)
    if (x < 0) throw std::invalid_argument("negative neighbor count");
  if (std::accumulate(k.begin(), k.end(), 0) != theta)
    throw std::invalid_argument(fmt("neighbor counts must sum to %d", theta));
  auto at = [&](int i) { return k[static_cast<std::size_t>(i - 3)]; };
  const Expr d = D(theta);
  const int kt = at(theta);
  switch (theta) {
    case 6: {
      const int k3 = at(3), k4 = at(4), k5 = at(5);
      if (kt <= 3 && k3 + k4 >= 2) return {(12.0 + kt) * d, W(3) + 6 * d};
      if (kt <= 3) return {(6.0 + k5 + 2 * kt) * d};
      if (kt == 4 && k3 + k4 >= 1) return {(6.0 + k5 + 2 * kt) * d};
      if (kt == 4) return {17 * d};
      if (kt == 5) return {(16.0 + 2 * k4 + 3 * k5) * d};
      return {22 * d};
    }
    case 7:
      if (kt <= 5) return {(14.0 + kt) * d};
      if (kt == 6) return {(22.0 - 2 * at(3) - at(4)) * d};
      return {26 * d};
    default:
      if (kt <= 7) return {(16.0 + 2 * kt) * d};
      return {36 * d};
  }
}

double lambda_value(int theta, std::span<const int> k, const WeightVector& wv) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : lambda_theta(theta, k)) best = std::min(best, e.eval(wv));
  return best;
}

std::vector<SymbolicRecurrence> symbolic_catalog(int theta) {
  require_theta(theta);
  switch (theta) {
    case 6: return catalog6();
    case 7: return catalog7();
    default: return catalog8();
  }
}

std::vector<Recurrence> catalog(int theta, const WeightVector& wv) {
  if (wv.theta != theta) throw std::invalid_argument("weight vector is for another level");
  std::vector<Recurrence> out;
  for (const auto& r : symbolic_catalog(theta)) out.push_back(r.eval(wv));
  return out;
}

// ---------------------------------------------------------------- constraints

std::vector<Constraint> weight_constraints(int theta) {
  require_theta(theta);
  std::vector<Constraint> out;
  for (int i = 3; i < theta; ++i) out.push_back({fmt("delta-order %d", i), D(i) - D(i + 1)});
  out.push_back({"delta-nonnegative", D(theta)});
  out.push_back({"double-top-delta", D(theta - 1) - 2 * D(theta)});
  const double c = theta == 6 ? 6 : theta == 7 ? 18 : 26;
  out.push_back({fmt("top-delta-vs-w3 %g", c), W(3) - c * D(theta)});
  for (int i = 3; i <= theta; ++i)
    for (int j = i; j <= theta; ++j) out.push_back({fmt("merge %d %d", i, j), W(i) + W(j) - W(i + j - 2)});
  if (theta == 6) {
    out.push_back({"shift-bound", 2 * D(6) - Expr::sigma()});
    out.push_back({"shift-nonnegative", Expr::sigma()});
  }
  return out;
}

std::vector<ConstraintResult> check_constraints(const WeightVector& wv) {
  std::vector<ConstraintResult> out;
  for (const auto& c : weight_constraints(wv.theta)) {
    double v = c.lhs.eval(wv);
    out.push_back({c.name, v, v >= -c.tolerance()});
  }
  return out;
}

bool feasible(const WeightVector& wv) {
  auto rs = check_constraints(wv);
  return std::all_of(rs.begin(), rs.end(), [](const auto& r) { return r.ok; });
}

std::vector<CrossLevelCheck> cross_level_constraints(const WeightVector& wv, double base,
                                                     std::span<const double> lower_weights, double target,
                                                     double slack) {
  if (lower_weights.size() != static_cast<std::size_t>(wv.theta - 3))
    throw std::invalid_argument(fmt("level %d needs %d lower weights", wv.theta, wv.theta - 3));
  std::vector<CrossLevelCheck> out;
  for (int j = 3; j < wv.theta; ++j) {
    double f = cross_term(base, lower_weights[static_cast<std::size_t>(j - 3)], wv.w(j));
    out.push_back({j, f, f <= target + slack});
  }
  return out;
}

LowerLevel published_lower_level(int theta) {
  require_theta(theta);
  switch (theta) {
    case 6: return {1.17366, {0.50907, 0.82427, 1.0}};
    case 7: return {1.18922, {0.49969, 0.76163, 0.92401, 1.0}};
    default: return {1.19698, {0.65077, 0.78229, 0.89060, 0.96384, 1.0}};
  }
}

double published_bound(int theta) {
  require_theta(theta);
  return theta == 6 ? 1.18922 : theta == 7 ? 1.19698 : 1.19951;
}

// ---------------------------------------------------------------- reports

bool AnalysisReport::constraints_ok() const {
  return std::all_of(constraints.begin(), constraints.end(), [](const auto& r) { return r.ok; });
}

bool AnalysisReport::cross_level_ok() const {
  return std::all_of(cross_level.begin(), cross_level.end(), [](const auto& r) { return r.ok; });
}

AnalysisReport analyze(const WeightVector& wv, double target) {
  AnalysisReport rep;
  rep.theta = wv.theta;
  rep.weights = wv;
  rep.constraints = check_constraints(wv);
  const auto lower = published_lower_level(wv.theta);
  rep.cross_level = cross_level_constraints(wv, lower.base, lower.weights, target);
  for (auto& r : catalog(wv.theta, wv)) {
    double f = branching_factor(r);
    if (f > rep.max_factor) {
      rep.max_factor = f;
      rep.worst_label = r.label;
    }
    rep.factors.push_back({std::move(r), f});
  }
  return rep;
}

// ---------------------------------------------------------------- optimizer

namespace {

struct Problem {
  int theta;
  bool free_sigma;
  std::vector<std::vector<Expr::Affine>> recurrences;
  std::vector<Expr::Affine> constraints;
  std::vector<double> tolerances;
  bool cross_level = false;
  LowerLevel lower{};

  [[nodiscard]] std::size_t dims() const { return static_cast<std::size_t>(theta - 3) + 1; }

  [[nodiscard]] double objective(const std::vector<double>& x) const {
    double worst = 0.0;
    std::vector<double> ds;
    for (const auto& rec : recurrences) {
      ds.clear();
      for (const auto& a : rec) {
        double d = a.eval(x);
        if (!(d > 0.0)) return std::numeric_limits<double>::infinity();
        ds.push_back(d);
      }
      worst = std::max(worst, branching_factor(ds, 1e-12));
    }
    if (cross_level)
      for (int j = 3; j < theta; ++j) {
        double w = x[static_cast<std::size_t>(j - 3)];
        if (!(w > 0.0)) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, cross_term(lower.base, lower.weights[static_cast<std::size_t>(j - 3)], w));
      }
    return worst;
  }

  // Feasible range of coordinate k with the others fixed.
  [[nodiscard]] std::pair<double, double> interval(const std::vector<double>& x, std::size_t k) const {
    double lo = 0.0, hi = 1.0;
    for (std::size_t c = 0; c < constraints.size(); ++c) {
      const auto& a = constraints[c];
      const double ck = a.coef[k];
      if (ck == 0.0) continue;
      const double rest = a.eval(x) - ck * x[k];
      const double bound = (-tolerances[c] - rest) / ck;
      if (ck > 0)
        lo = std::max(lo, bound);
      else
        hi = std::min(hi, bound);
    }
    return {lo, hi};
  }

  // Cyclic projection onto the constraint half-spaces and the [0, 1] box,
  // moving only coordinates below `dims` other than `pinned`. Stops once every
  // constraint is within half its tolerance; none if the sweeps do not get there.
  [[nodiscard]] std::optional<std::vector<double>> project(std::vector<double> x, std::size_t pinned,
                                                           std::size_t dims) const {
    auto movable = [&](std::size_t i) { return i < dims && i != pinned; };
    for (int sweep = 0; sweep < 200; ++sweep) {
      bool clean = true;
      for (std::size_t i = 0; i < dims; ++i)
        if (movable(i)) x[i] = std::clamp(x[i], 0.0, 1.0);
      for (std::size_t c = 0; c < constraints.size(); ++c) {
        const auto& a = constraints[c];
        const double v = a.eval(x);
        if (v >= 0.0) continue;
        if (v < -0.5 * tolerances[c]) clean = false;
        double norm = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
          if (movable(i)) norm += a.coef[i] * a.coef[i];
        if (norm == 0.0) return std::nullopt;
        for (std::size_t i = 0; i < x.size(); ++i)
          if (movable(i)) x[i] -= v / norm * a.coef[i];
      }
      if (clean) return x;
    }
    return std::nullopt;
  }
};

std::vector<double> to_point(const WeightVector& wv) {
  std::vector<double> x = wv.free;
  x.push_back(wv.sigma);
  return x;
}

WeightVector from_point(int theta, const std::vector<double>& x) {
  WeightVector wv{theta, std::vector<double>(x.begin(), x.end() - 1), x.back()};
  return wv;
}

OptimizeResult descend(const Problem& pb, const WeightVector& initial, int max_rounds) {
  if (!feasible(initial)) throw std::invalid_argument("initial weights violate the weight constraints");
  std::vector<double> x = to_point(initial);
  double fx = pb.objective(x);
  OptimizeResult res{initial, fx, fx, 0};
  const std::size_t dims = pb.free_sigma ? pb.dims() : pb.dims() - 1;
  constexpr double kPhi = 0.6180339887498949;

  // Golden-section search of t in [lo, hi] for point(t); improving feasible
  // candidates replace x. Infeasible t scores by distance to `home`, which
  // keeps the bracket moving back toward the feasible range.
  auto search = [&](double lo, double hi, double home,
                    const std::function<std::optional<std::vector<double>>(double)>& point) {
    auto at = [&](double t) {
      auto y = point(t);
      return y ? pb.objective(*y) : 1e6 + std::abs(t - home);
    };
    double a = lo, b = hi;
    double c = b - kPhi * (b - a), d = a + kPhi * (b - a);
    double fc = at(c), fd = at(d);
    for (int it = 0; it < 48 && b - a > 1e-10; ++it) {
      if (fc <= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kPhi * (b - a);
        fc = at(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kPhi * (b - a);
        fd = at(d);
      }
    }
    for (double t : {c, d, lo, hi}) {
      auto y = point(t);
      if (!y) continue;
      double fy = pb.objective(*y);
      if (fy < fx - 1e-13 && feasible(from_point(pb.theta, *y))) {
        x = std::move(*y);
        fx = fy;
      }
    }
  };

  for (int round = 0; round < max_rounds; ++round) {
    const double before = fx;
    for (std::size_t k = 0; k < dims; ++k) {
      auto [lo, hi] = pb.interval(x, k);
      if (hi > lo)
        search(lo, hi, x[k], [&](double t) -> std::optional<std::vector<double>> {
          auto y = x;
          y[k] = t;
          return y;
        });
      // Moves leaving the coordinate's feasible range, repaired by projection.
      search(0.0, 1.0, x[k], [&](double t) {
        auto y = x;
        y[k] = t;
        return pb.project(std::move(y), k, dims);
      });
    }
    res.rounds = round + 1;
    if (before - fx < 1e-10) break;
  }
  res.weights = from_point(pb.theta, x);
  res.max_factor = fx;
  return res;
}

Problem make_problem(int theta, SigmaMode mode, std::span<const SymbolicRecurrence> recs) {
  Problem pb{theta, theta == 6 && mode == SigmaMode::Free, {}, {}, {}};
  for (const auto& r : recs) {
    std::vector<Expr::Affine> rec;
    for (const auto& e : r.decreases) rec.push_back(e.compile(theta));
    pb.recurrences.push_back(std::move(rec));
  }
  for (const auto& c : weight_constraints(theta)) {
    pb.constraints.push_back(c.lhs.compile(theta));
    pb.tolerances.push_back(c.tolerance());
  }
  return pb;
}

}  // namespace

OptimizeResult optimize_weights(const WeightVector& initial, SigmaMode mode, int max_rounds) {
  const auto recs = symbolic_catalog(initial.theta);
  Problem pb = make_problem(initial.theta, mode, recs);
  pb.cross_level = true;
  pb.lower = published_lower_level(initial.theta);
  return descend(pb, initial, max_rounds);
}

OptimizeResult optimize_weights(const WeightVector& initial, SigmaMode mode,
                                std::span<const SymbolicRecurrence> recurrences, int max_rounds) {
  require_theta(initial.theta);
  return descend(make_problem(initial.theta, mode, recurrences), initial, max_rounds);
}

}  // namespace mis::analysis
