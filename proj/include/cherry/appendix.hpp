#pragma once
// Numerical replay of the five auxiliary inequalities behind the density
// theorems. Each f is evaluated twice (substituting the solved y into the
// defining polynomial, and through the explicit closed form in x) and the
// inequalities are minimized over uniform (d, a, x) grids. Calculus claims are
// replayed with finite differences. R(a,d) = a^3 + (2d - a^2) sqrt(2d + a^2)
// is the common right-hand side.

#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace cherry::appendix {

using json = nlohmann::json;

enum class Lemma { A1, A2, A3, A4, A5 };

inline const char* to_string(Lemma l) {
  switch (l) {
    case Lemma::A1: return "A1";
    case Lemma::A2: return "A2";
    case Lemma::A3: return "A3";
    case Lemma::A4: return "A4";
    case Lemma::A5: return "A5";
  }
  return "?";
}

inline Lemma lemma_from_string(const std::string& s) {
  for (auto l : {Lemma::A1, Lemma::A2, Lemma::A3, Lemma::A4, Lemma::A5})
    if (s == to_string(l)) return l;
  throw std::invalid_argument("unknown lemma '" + s + "' (expected A1..A5)");
}

inline constexpr double kDLo = 17.0 / 50, kDHi = 7.0 / 20;
inline constexpr double kSlack = 1e-12;
inline constexpr double kFdStep = 1e-5;
inline constexpr double kFdTol = 1e-7;

struct AppendixPoint {
  double d = 0, a = 0, x = 0, y = 0;
};

struct Interval {
  double lo = 0, hi = 0;
  bool empty() const { return hi < lo; }
};

namespace detail {

inline double root(double v, const char* who) {
  if (v < 0) {
    if (v < -kSlack) throw std::domain_error(std::string(who) + ": negative radicand " + std::to_string(v));
    return 0.0;
  }
  return std::sqrt(v);
}

inline bool inside(double v, Interval i) { return v >= i.lo - kSlack && v <= i.hi + kSlack; }

}  // namespace detail

inline double rhs_value(double a, double d) { return a * a * a + (2 * d - a * a) * std::sqrt(2 * d + a * a); }

inline double quasi_star_side(double d) { return 4 * d - 1 + std::pow(1 - 2 * d, 1.5); }

/// R(a,d) - (4d - 1 + (1-2d)^{3/2})
inline double a1_margin(double a, double d) { return rhs_value(a, d) - quasi_star_side(d); }

/// (6271 sqrt(7329) - 347833) / 10^6 - 16 sqrt(2) / 125
inline double a1_corner_closed_form() {
  return (6271 * std::sqrt(7329.0) - 347833) / 1e6 - 16 * std::sqrt(2.0) / 125;
}

inline Interval a_range(Lemma l) {
  return (l == Lemma::A1 || l == Lemma::A2) ? Interval{17.0 / 100, 23.0 / 100} : Interval{1.0 / 3, 2.0 / 5};
}

inline double theta(double a, double d) { return std::sqrt(a * a + 2 * d) - a - 0.2; }

/// The lemma's x-range at (a, d).
inline Interval x_range(Lemma l, double a, double d) {
  switch (l) {
    case Lemma::A1: return {0, 0};
    case Lemma::A2: return {0, a};
    case Lemma::A3: return {0, theta(a, d)};
    case Lemma::A4: return {0, a};
    case Lemma::A5: return {1 - a / 2 - (1 - 2 * d) / (2 * a), 2 * d - 0.25};
  }
  return {0, 0};
}

/// Solves the lemma's constraint for y.
inline double solve_y(Lemma l, double a, double d, double x) {
  switch (l) {
    case Lemma::A2: return -x + detail::root(x * x + 2 * a * x + 2 * d - 2 * a * a, "A2 solve");
    case Lemma::A3: return detail::root(2 * (d - a * x - a / 5), "A3 solve");
    case Lemma::A4: return detail::root(25 * x * x + 10 * x + 50 * d - 10 * a, "A4 solve") / 5 - x;
    case Lemma::A5: return x + detail::root(x * x - 2 * x + 2 * d, "A5 solve");
    default: throw std::invalid_argument("solve_y: A1 has no free variable");
  }
}

/// Constraint(x, y) - d.
inline double constraint_residual(Lemma l, const AppendixPoint& p) {
  const double a = p.a, x = p.x, y = p.y;
  switch (l) {
    case Lemma::A2: return y * y / 2 + x * y + a * a - a * x - p.d;
    case Lemma::A3: return y * y / 2 + a * x + a / 5 - p.d;
    case Lemma::A4: return y * y / 2 + x * y + a / 5 - x / 5 - p.d;
    case Lemma::A5: return y * y / 2 + (1 - y) * x - p.d;
    default: return 0;
  }
}

/// f evaluated from its defining polynomial in (x, y).
inline double f_direct(Lemma l, double a, double x, double y) {
  switch (l) {
    case Lemma::A2: return x * y * y + (a - x) * a * a + a * (a + y) * (a + y) + (y - a) * (x + y) * (x + y);
    case Lemma::A3:
      return (x + 0.2) * (y + a) * (y + a) + (y - x - 0.2) * y * y + a * (x + 0.2) * (x + 0.2);
    case Lemma::A4: return 0.2 * (y + a) * (y + a) + (y - 0.2) * (x + y) * (x + y) + x * y * y + (a - x) * 0.04;
    case Lemma::A5: return x + (y - x) * y * y + (1 - y) * x * x;
    default: throw std::invalid_argument("f_direct: A1 has no f");
  }
}

/// f as an explicit function of x.
inline double f_closed(Lemma l, double a, double d, double x) {
  switch (l) {
    case Lemma::A2: {
      const double s = detail::root(x * x + 2 * a * x + 2 * d - 2 * a * a, "A2");
      return x * x * x + a * x * x + (2 * d - x * x) * s - 3 * a * a * x + 2 * a * a * a;
    }
    case Lemma::A3:
      return a * (x + 0.2) * (x + a + 0.2) + 2 * d * detail::root(2 * (d - a * x - a / 5), "A3");
    case Lemma::A4: {
      const double s = detail::root(25 * x * x + 10 * x + 50 * d - 10 * a, "A4");
      return (25 * x * x * x + 5 * x * x - 10 * a * x - x + 5 * a * a + a - (5 * x * x - 10 * d) * s) / 25;
    }
    case Lemma::A5: {
      const double s = detail::root(x * x - 2 * x + 2 * d, "A5");
      return x * x * x - 3 * x * x + 4 * d * x + x + s * s * s;
    }
    default: throw std::invalid_argument("f_closed: A1 has no f");
  }
}

/// Analytic first (order 1) or second (order 2) x-derivative, where the
/// proofs state one.
inline std::optional<double> f_derivative(Lemma l, int order, double a, double d, double x) {
  if (l == Lemma::A2 && order == 1) {
    const double s = std::sqrt(x * x + 2 * a * x + 2 * d - 2 * a * a);
    return 3 * x * x + 2 * a * x - 3 * a * a + (2 * d - x * x) * (x + a) / s - 2 * x * s;
  }
  if (l == Lemma::A3) {
    const double q = d - a * x - a / 5;
    if (order == 1) return a * (x + 0.2) + a * (x + a + 0.2) - a * d * std::sqrt(2 / q);
    if (order == 2) return 2 * a - std::sqrt(2.0) * a * a * d / (2 * std::pow(q, 1.5));
  }
  if (l == Lemma::A4 && order == 1) {
    const double s = std::sqrt(25 * x * x + 10 * x + 50 * d - 10 * a);
    return (75 * x * x + 10 * x - 10 * a - 1 - 10 * x * s - (50 * x + 10) * (5 * x * x - 10 * d) / (2 * s)) / 25;
  }
  if (l == Lemma::A5) {
    const double s = std::sqrt(x * x - 2 * x + 2 * d);
    if (order == 1) return 3 * x * x - 6 * x + 4 * d + 1 + 3 * (x - 1) * s;
    if (order == 2) return 6 * x - 6 + 3 * (x - 1) * (x - 1) / s + 3 * s;
  }
  return std::nullopt;
}

struct EvalResult {
  AppendixPoint point;
  double value = 0;        // direct substitution
  double closed_form = 0;  // explicit x-form
  double residual = 0;     // constraint residual at the solved y
};

/// Evaluates f at (d, a, x) with y solved from the constraint. Throws
/// std::domain_error outside the lemma's box, verification_error when the two
/// evaluations or the constraint disagree beyond 1e-12.
inline EvalResult eval_f(Lemma l, double d, double a, double x) {
  if (l == Lemma::A1) throw std::invalid_argument("eval_f: A1 has no f");
  if (!detail::inside(d, {kDLo, kDHi})) throw std::domain_error("eval_f: d outside [17/50, 7/20]");
  if (!detail::inside(a, a_range(l))) throw std::domain_error("eval_f: a outside the lemma's range");
  const auto xr = x_range(l, a, d);
  if (!detail::inside(x, xr)) throw std::domain_error("eval_f: x outside the lemma's range");
  EvalResult r;
  r.point = {d, a, x, solve_y(l, a, d, x)};
  if (r.point.y < -kSlack) throw std::domain_error("eval_f: solved y is negative");
  r.value = f_direct(l, a, x, r.point.y);
  r.closed_form = f_closed(l, a, d, x);
  r.residual = constraint_residual(l, r.point);
  if (std::abs(r.value - r.closed_form) > kSlack)
    throw verification_error("eval_f: closed form and substitution disagree by " +
                             std::to_string(std::abs(r.value - r.closed_form)));
  if (std::abs(r.residual) > kSlack)
    throw verification_error("eval_f: constraint residual " + std::to_string(r.residual));
  return r;
}

/// The inequality margin at a node: claimed bound minus f.
inline double margin(Lemma l, double d, double a, double x) {
  switch (l) {
    case Lemma::A1: return a1_margin(a, d);
    case Lemma::A4: return f_closed(l, a, d, a) - eval_f(l, d, a, x).value;
    default: return rhs_value(a, d) - eval_f(l, d, a, x).value;
  }
}

struct Location {
  double d = 0, a = 0, x = 0;
};

struct DerivativeClaim {
  int order = 1;
  Interval x;  // where the sign claim is made (intersected with the lemma's x-range)
};

inline std::vector<DerivativeClaim> derivative_claims(Lemma l, double a, double d) {
  switch (l) {
    case Lemma::A2: return {{1, {0, a}}};
    case Lemma::A3: return {{2, {0, 0.3}}, {1, {0.3, 0.37}}};
    case Lemma::A4: return {{1, {0.25, 0.4}}};
    case Lemma::A5: return {{2, {1.0 / 3, std::min(0.45, 2 * d - 0.25)}}};
    default: return {};
  }
}

struct LemmaCheckReport {
  Lemma lemma = Lemma::A1;
  int steps = 0;
  std::uint64_t nodes = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  Location min_at;
  // nodes at the lemma's stated maximizer (x = a for A2/A4, x = theta for A3)
  std::uint64_t boundary_nodes = 0;
  double boundary_min = std::numeric_limits<double>::infinity();
  std::uint64_t derivative_checks = 0;
  std::uint64_t derivative_violations = 0;
  double derivative_min = std::numeric_limits<double>::infinity();
  Location derivative_min_at;
  double derivative_analytic_gap = 0;  // max |finite difference - analytic|
  double max_closed_form_gap = 0;
  double max_residual = 0;
  std::optional<double> region_min;  // A4: min of f3(a) - f3(x) over x in [0, 1/4]
  Location region_min_at;
  double region_x_step = 0;
  double coarse_min_margin = 0;  // same check at half the resolution
  double refinement_delta = 0;   // |min_margin - coarse_min_margin|
  bool passed = false;
  double wall_ms = 0;
};

namespace detail {

inline double node(Interval i, int k, int steps) {
  if (steps == 0 || i.hi == i.lo) return i.lo;
  return k == steps ? i.hi : i.lo + (i.hi - i.lo) * k / steps;
}

// h-step finite difference of f(x): central when x +- h stays in [lo, hi],
// otherwise the second-order one-sided stencil pointing into the interval.
template <typename F>
double finite_difference(F f, int order, double x, Interval i) {
  const double h = kFdStep;
  const bool left_ok = x - h >= i.lo - kSlack;
  const bool right_ok = x + h <= i.hi + kSlack;
  const double s = right_ok || !left_ok ? h : -h;
  if (order == 1) {
    if (left_ok && right_ok) return (f(x + h) - f(x - h)) / (2 * h);
    return (-3 * f(x) + 4 * f(x + s) - f(x + 2 * s)) / (2 * s);
  }
  if (left_ok && right_ok) return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
  return (2 * f(x) - 5 * f(x + s) + 4 * f(x + 2 * s) - f(x + 3 * s)) / (h * h);
}

struct GridResult {
  double min_margin = std::numeric_limits<double>::infinity();
  Location min_at;
  std::uint64_t nodes = 0, boundary_nodes = 0;
  double boundary_min = std::numeric_limits<double>::infinity();
  double closed_gap = 0, residual = 0;
};

inline bool has_boundary_maximizer(Lemma l) { return l == Lemma::A2 || l == Lemma::A3 || l == Lemma::A4; }

inline GridResult margin_grid(Lemma l, int steps) {
  GridResult g;
  const Interval ar = a_range(l);
  for (int i = 0; i <= steps; ++i) {
    const double d = node({kDLo, kDHi}, i, steps);
    for (int j = 0; j <= steps; ++j) {
      const double a = node(ar, j, steps);
      if (l == Lemma::A1) {
        const double m = a1_margin(a, d);
        ++g.nodes;
        if (m < g.min_margin) g.min_margin = m, g.min_at = {d, a, 0};
        continue;
      }
      const Interval xr = x_range(l, a, d);
      if (xr.empty()) continue;
      const double bound = l == Lemma::A4 ? f_closed(l, a, d, a) : rhs_value(a, d);
      for (int k = 0; k <= steps; ++k) {
        const double x = node(xr, k, steps);
        const auto e = eval_f(l, d, a, x);
        const double m = bound - e.value;
        ++g.nodes;
        g.closed_gap = std::max(g.closed_gap, std::abs(e.value - e.closed_form));
        g.residual = std::max(g.residual, std::abs(e.residual));
        if (k == steps && has_boundary_maximizer(l)) {
          ++g.boundary_nodes;
          g.boundary_min = std::min(g.boundary_min, m);
          continue;
        }
        if (m < g.min_margin) g.min_margin = m, g.min_at = {d, a, x};
      }
    }
  }
  return g;
}

}  // namespace detail

inline constexpr double kA4RegionBound = 0.002232;

/// Grid check of one lemma at `steps` intervals per axis (steps >= 10).
inline LemmaCheckReport check_lemma(Lemma l, int steps) {
  if (steps < 10) throw std::invalid_argument("check_lemma: steps must be at least 10");
  const auto t0 = std::chrono::steady_clock::now();
  LemmaCheckReport rep;
  rep.lemma = l;
  rep.steps = steps;

  const auto g = detail::margin_grid(l, steps);
  rep.nodes = g.nodes;
  rep.min_margin = g.min_margin;
  rep.min_at = g.min_at;
  rep.boundary_nodes = g.boundary_nodes;
  rep.boundary_min = g.boundary_min;
  rep.max_closed_form_gap = g.closed_gap;
  rep.max_residual = g.residual;
  rep.coarse_min_margin = detail::margin_grid(l, std::max(5, steps / 2)).min_margin;
  rep.refinement_delta = std::abs(rep.min_margin - rep.coarse_min_margin);

  // calculus claims on the proof's sub-intervals
  const Interval ar = a_range(l);
  for (int i = 0; i <= steps; ++i) {
    const double d = detail::node({kDLo, kDHi}, i, steps);
    for (int j = 0; j <= steps; ++j) {
      const double a = detail::node(ar, j, steps);
      auto f = [&](double x) { return f_closed(l, a, d, x); };
      for (const auto& c : derivative_claims(l, a, d)) {
        if (c.x.empty()) continue;
        for (int k = 0; k <= steps; ++k) {
          const double x = detail::node(c.x, k, steps);
          const double fd = detail::finite_difference(f, c.order, x, c.x);
          ++rep.derivative_checks;
          if (fd < -kFdTol) ++rep.derivative_violations;
          if (fd < rep.derivative_min) rep.derivative_min = fd, rep.derivative_min_at = {d, a, x};
          if (const auto an = f_derivative(l, c.order, a, d, x))
            rep.derivative_analytic_gap = std::max(rep.derivative_analytic_gap, std::abs(fd - *an));
        }
      }
    }
  }

  if (l == Lemma::A4) {
    // the proof's direct region: x in [0, 1/4] with x-step at most 0.002
    const int nx = std::max(steps, 125);
    rep.region_x_step = 0.25 / nx;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= steps; ++i) {
      const double d = detail::node({kDLo, kDHi}, i, steps);
      for (int j = 0; j <= steps; ++j) {
        const double a = detail::node(ar, j, steps);
        const double fa = f_closed(l, a, d, a);
        for (int k = 0; k <= nx; ++k) {
          const double x = detail::node({0, 0.25}, k, nx);
          const double m = fa - f_closed(l, a, d, x);
          if (m < best) best = m, rep.region_min_at = {d, a, x};
        }
      }
    }
    rep.region_min = best;
  }

  rep.passed = rep.min_margin > 0 && rep.derivative_violations == 0 &&
               (rep.boundary_nodes == 0 || rep.boundary_min >= -kSlack) && rep.max_closed_form_gap <= kSlack &&
               rep.max_residual <= kSlack && (!rep.region_min || *rep.region_min > kA4RegionBound - 1e-4);
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

struct InequalityCheck {
  std::string name;
  double value = 0;
  double bound = 0;
  double margin = 0;  // value - bound, or -|value - bound| for identities
  bool passed = false;
};

/// Standalone numeric constants quoted in the structural proofs.
inline std::vector<InequalityCheck> interior_bounds_check() {
  std::vector<InequalityCheck> out;
  auto strict = [&](std::string name, double v, double b) { out.push_back({std::move(name), v, b, v - b, v > b}); };
  auto equal = [&](std::string name, double v, double b) {
    out.push_back({std::move(name), v, b, -std::abs(v - b), std::abs(v - b) <= kSlack});
  };

  strict("(54-sqrt(2671))/100 > 1/50", (54 - std::sqrt(2671.0)) / 100, 1.0 / 50);

  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 1000; ++i) {
    const double al = 1.0 / 3 + (2.0 / 5 - 1.0 / 3) * i / 1000;
    worst = std::min(worst, 1 - al - std::sqrt(1 - 17.0 / 25 - al * al));
  }
  out.push_back({"min over alpha in [1/3,2/5] of 1-alpha-sqrt(1-17/25-alpha^2) >= 1/5", worst, 0.2, worst - 0.2,
                 worst - 0.2 >= -kSlack});

  const double scaled = (17.0 / 25 - (2.0 / 3) * (2.0 / 3)) / (2.0 / 3);
  equal("(17/25-(2/3)^2)/(2/3) = 53/150", scaled, 53.0 / 150);
  equal("1 - 1/6 - (1-2*17/50)/(2/3) = 53/150", 1 - 1.0 / 6 - (1 - 2 * 17.0 / 50) / (2.0 / 3), 53.0 / 150);
  strict("53/150 > 1/3", 53.0 / 150, 1.0 / 3);
  equal("(1-2*17/50)^{3/2} = 16 sqrt(2)/125", std::pow(1 - 2 * 17.0 / 50, 1.5), 16 * std::sqrt(2.0) / 125);
  equal("A1 corner margin = (6271 sqrt(7329)-347833)/10^6 - 16 sqrt(2)/125", a1_margin(0.23, 0.34),
        a1_corner_closed_form());
  strict("theta lower: sqrt((2/5)^2+2*17/50)-2/5-1/5 > 3/10", std::sqrt(0.16 + 0.68) - 0.6, 0.3);
  strict("theta upper: 37/100 > sqrt((1/3)^2+2*7/20)-1/3-1/5", 0.37,
         std::sqrt(1.0 / 9 + 0.7) - 1.0 / 3 - 0.2);
  equal("2*(7/20) - 1/4 = 9/20", 2 * 0.35 - 0.25, 0.45);
  return out;
}

inline json loc_json(const Location& l) { return {{"d", l.d}, {"a", l.a}, {"x", l.x}}; }

inline json to_json(const LemmaCheckReport& r) {
  json j = {{"lemma", to_string(r.lemma)},
            {"steps", r.steps},
            {"nodes", r.nodes},
            {"min_margin", r.min_margin},
            {"min_at", loc_json(r.min_at)},
            {"derivative_checks", r.derivative_checks},
            {"derivative_violations", r.derivative_violations},
            {"max_closed_form_gap", r.max_closed_form_gap},
            {"max_residual", r.max_residual},
            {"coarse_min_margin", r.coarse_min_margin},
            {"refinement_delta", r.refinement_delta},
            {"passed", r.passed},
            {"wall_ms", r.wall_ms}};
  if (r.boundary_nodes) {
    j["boundary_nodes"] = r.boundary_nodes;
    j["boundary_min"] = r.boundary_min;
  }
  if (r.derivative_checks) {
    j["derivative_min"] = r.derivative_min;
    j["derivative_min_at"] = loc_json(r.derivative_min_at);
    j["derivative_analytic_gap"] = r.derivative_analytic_gap;
  }
  if (r.region_min) {
    j["region_min"] = *r.region_min;
    j["region_min_at"] = loc_json(r.region_min_at);
    j["region_x_step"] = r.region_x_step;
  }
  return j;
}

inline json to_json(const InequalityCheck& c) {
  return {{"name", c.name}, {"value", c.value}, {"bound", c.bound}, {"margin", c.margin}, {"passed", c.passed}};
}

}  // namespace cherry::appendix
