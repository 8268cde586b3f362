#pragma once
// Asymptotic cherry-density expressions of the three lower-bound constructions,
// theorem right-hand sides, rectangular grid scans, and finite-n convergence of
// the constructions (exact integer counts from degree profiles).

#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "constructions.hpp"

namespace cherry {

inline constexpr double kTieBand = 1e-9;
inline constexpr double kRadicandSlack = 1e-12;

struct DensityPoint {
  double rho = 0;
  double alpha = 0;
  double beta = 0;

  void validate() const {
    for (const double v : {rho, alpha, beta})
      if (!(v >= 0.0 && v <= 1.0)) throw std::domain_error("DensityPoint: rho, alpha, beta must lie in [0, 1]");
  }
};

enum class DensityFamily { quasi_star, g1, g2 };

inline const char* to_string(DensityFamily f) {
  switch (f) {
    case DensityFamily::quasi_star: return "quasi_star";
    case DensityFamily::g1: return "g1";
    case DensityFamily::g2: return "g2";
  }
  return "?";
}

inline DensityFamily density_family_from_string(const std::string& s) {
  if (s == "quasi_star" || s == "quasi-star" || s == "qs") return DensityFamily::quasi_star;
  if (s == "g1" || s == "G1") return DensityFamily::g1;
  if (s == "g2" || s == "G2") return DensityFamily::g2;
  throw std::invalid_argument("unknown family '" + s + "' (expected quasi_star, g1 or g2)");
}

namespace detail {

inline double checked_sqrt(double x, const char* what) {
  if (x < 0) {
    if (x < -kRadicandSlack) throw std::domain_error(std::string(what) + ": negative radicand " + std::to_string(x));
    return 0.0;
  }
  return std::sqrt(x);
}

// Label of the largest entry; entries within kTieBand of the top are reported as a tie.
inline std::string argmax_label(const std::vector<std::pair<std::string, std::optional<double>>>& xs,
                                double& best) {
  best = -INFINITY;
  for (const auto& [_, v] : xs)
    if (v) best = std::max(best, *v);
  std::string label;
  int hits = 0;
  for (const auto& [name, v] : xs)
    if (v && best - *v <= kTieBand) {
      label += (hits++ ? "," : "") + name;
    }
  return hits > 1 ? "tie:" + label : label;
}

}  // namespace detail

/// 2 rho - 1 + (1 - rho)^{3/2}
inline double quasi_star_density(double rho) {
  return 2 * rho - 1 + std::pow(detail::checked_sqrt(1 - rho, "quasi_star_density"), 3);
}

/// alpha^2 beta + beta^2 alpha + rho sqrt(rho - 2 alpha beta)
inline double g1_density(const DensityPoint& p) {
  return p.alpha * p.alpha * p.beta + p.beta * p.beta * p.alpha +
         p.rho * detail::checked_sqrt(p.rho - 2 * p.alpha * p.beta, "g1_density");
}

/// alpha^3 + (rho - alpha^2) sqrt(rho + alpha^2)
inline double g2_density(const DensityPoint& p) {
  return p.alpha * p.alpha * p.alpha +
         (p.rho - p.alpha * p.alpha) * detail::checked_sqrt(p.rho + p.alpha * p.alpha, "g2_density");
}

struct BoundBundle {
  DensityPoint point;
  double quasi_star_value = 0;
  std::optional<double> g1_value;  // undefined when rho < 2 alpha beta + beta^2
  double g2_value = 0;
  double max_value = 0;
  std::string argmax;
  // whether the finite constructions fit inside [n] at this point (leading order)
  bool g1_realizable = false;
  bool g2_realizable = false;
};

inline BoundBundle fact13_bounds(const DensityPoint& p) {
  p.validate();
  BoundBundle b;
  b.point = p;
  b.quasi_star_value = quasi_star_density(p.rho);
  const double g1_floor = 2 * p.alpha * p.beta + p.beta * p.beta;
  if (p.rho >= g1_floor - kRadicandSlack) b.g1_value = g1_density(p);
  b.g2_value = g2_density(p);
  b.argmax = detail::argmax_label(
      {{"quasi_star", b.quasi_star_value}, {"g1", b.g1_value}, {"g2", b.g2_value}}, b.max_value);
  if (b.g1_value)
    b.g1_realizable = std::sqrt(std::max(0.0, p.rho - 2 * p.alpha * p.beta)) + p.alpha <= 1 + kRadicandSlack &&
                      p.beta + p.alpha <= 1 + kRadicandSlack;
  const double clique = std::sqrt(p.rho + p.alpha * p.alpha);
  b.g2_realizable = clique <= 1 + kRadicandSlack && clique - p.alpha >= p.beta - kRadicandSlack;
  return b;
}

enum class Theorem { t14, t15 };

inline Theorem theorem_from_string(const std::string& s) {
  if (s == "1.4") return Theorem::t14;
  if (s == "1.5") return Theorem::t15;
  throw std::invalid_argument("unknown theorem '" + s + "' (expected 1.4 or 1.5)");
}

struct ThmValue {
  double value = 0;
  bool in_range = false;
  std::string winner;  // g2 | quasi_star | tie:...
};

/// Right-hand side of the density theorems; the formula is evaluated anywhere,
/// in_range tells whether the point lies in the theorem's rectangle.
inline ThmValue thm_value(const DensityPoint& p, Theorem which) {
  p.validate();
  constexpr double eps = 1e-12;
  auto within = [](double v, double lo, double hi) { return v >= lo - eps && v <= hi + eps; };
  ThmValue out;
  const bool rho_ok = within(p.rho, 17.0 / 25, 7.0 / 10);
  if (which == Theorem::t14) {
    out.value = g2_density(p);
    out.winner = "g2";
    out.in_range = rho_ok && within(p.alpha, 17.0 / 100, 23.0 / 100) && std::abs(p.beta - p.alpha) <= eps;
  } else {
    out.winner = detail::argmax_label({{"quasi_star", quasi_star_density(p.rho)}, {"g2", g2_density(p)}}, out.value);
    out.in_range = rho_ok && within(p.alpha, 1.0 / 3, 2.0 / 5) && std::abs(p.beta - 0.2) <= eps;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Finite constructions.

inline constexpr count_t kMaxDensityOrder = 2'000'000;

struct ConstructionDensity {
  DensityFamily family = DensityFamily::quasi_star;
  count_t n = 0, m = 0, l = 0, k = 0;
  count_t edges = 0;
  count_t cherries = 0;
  Rational edge_density;
  Rational cherry_density;
  double formula = 0;  // the family's asymptotic expression at the point
  double error = 0;    // |cherry_density - formula|
  bool split_remainder = false;  // G2 remainder placed on two helper vertices
};

/// Builds the family at n with l = round(alpha n), k = round(beta n),
/// m = round(rho C(n,2)) (half away from zero) and evaluates it through its
/// degree profile. Throws infeasible_parameters / index_collision when the
/// rounded parameters do not fit.
inline ConstructionDensity construction_density(count_t n, const DensityPoint& p, DensityFamily family) {
  p.validate();
  if (n < 3) throw undefined_density("construction_density: n must be at least 3");
  if (n > kMaxDensityOrder) throw std::invalid_argument("construction_density: n exceeds 2,000,000");
  ConstructionDensity out;
  out.family = family;
  out.n = n;
  out.m = std::llround(p.rho * static_cast<double>(choose2(n)));
  out.l = std::llround(p.alpha * static_cast<double>(n));
  out.k = std::llround(p.beta * static_cast<double>(n));
  out.m = std::clamp<count_t>(out.m, 0, choose2(n));
  const int ni = static_cast<int>(n), li = static_cast<int>(out.l), ki = static_cast<int>(out.k);
  DegreeProfile prof;
  switch (family) {
    case DensityFamily::quasi_star:
      prof = quasi_star_profile(n, out.m);
      out.formula = quasi_star_density(p.rho);
      break;
    case DensityFamily::g1:
      if (p.rho < 2 * p.alpha * p.beta + p.beta * p.beta)
        throw infeasible_parameters("construction_density: g1 needs rho >= 2 alpha beta + beta^2");
      prof = g1_profile(g1_plan(ni, out.m, li, ki));
      out.formula = g1_density(p);
      break;
    case DensityFamily::g2: {
      const auto plan = g2_plan(ni, out.m, li, ki, RemainderPolicy::split);
      out.split_remainder = plan.spills();
      prof = g2_profile(plan);
      out.formula = g2_density(p);
      break;
    }
  }
  out.edges = profile_edges(prof);
  if (out.edges != out.m || profile_order(prof) != n)
    throw verification_error("construction_density: degree profile disagrees with (n, m)");
  out.cherries = profile_cherries(prof);
  out.edge_density = edge_density(n, out.edges);
  out.cherry_density = cherry_density(n, out.cherries);
  out.error = std::abs(out.cherry_density.value() - out.formula);
  return out;
}

struct ConvergenceReport {
  std::vector<ConstructionDensity> rows;
  double fitted_c = 0;   // least-squares C in error ~ C / n
  double max_c = 0;      // max over rows of n * error
  bool monotone = true;  // error[i+1] <= 1.1 error[i]
};

inline ConvergenceReport converge(DensityFamily family, const DensityPoint& p, const std::vector<count_t>& ns,
                                  double slack = 0.1) {
  ConvergenceReport rep;
  double num = 0, den = 0;
  for (const auto n : ns) {
    rep.rows.push_back(construction_density(n, p, family));
    const auto& r = rep.rows.back();
    const double inv = 1.0 / static_cast<double>(n);
    num += r.error * inv;
    den += inv * inv;
    rep.max_c = std::max(rep.max_c, r.error * static_cast<double>(n));
  }
  rep.fitted_c = den > 0 ? num / den : 0;
  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    if (rep.rows[i].error > (1 + slack) * rep.rows[i - 1].error) rep.monotone = false;
  return rep;
}

// ---------------------------------------------------------------------------
// Grid scans.

struct GridAxis {
  double lo = 0, hi = 0, step = 0;

  std::vector<double> values() const {
    if (step <= 0 || hi <= lo) return {lo};
    const auto count = std::llround(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> v;
    for (long long i = 0; i < count; ++i) v.push_back(lo + static_cast<double>(i) * step);
    return v;
  }
};

/// "0.68" or "0.68:0.70:0.005"
inline GridAxis parse_axis(const std::string& text) {
  auto num = [&](const std::string& s) {
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw std::invalid_argument("bad number '" + s + "' in axis '" + text + "'");
    return v;
  };
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() == 1) {
    const double v = num(parts[0]);
    return {v, v, 0};
  }
  if (parts.size() != 3) throw std::invalid_argument("axis '" + text + "' must be VALUE or LO:HI:STEP");
  GridAxis a{num(parts[0]), num(parts[1]), num(parts[2])};
  if (a.step <= 0 || a.hi < a.lo) throw std::invalid_argument("axis '" + text + "' needs LO <= HI and STEP > 0");
  return a;
}

struct ScanGrid {
  GridAxis rho{0.68, 0.68, 0}, alpha{0.2, 0.2, 0}, beta{0.2, 0.2, 0};
  bool beta_tracks_alpha = false;  // beta = alpha at every point
};

struct ScanRow {
  BoundBundle bounds;
  ThmValue thm14;
  ThmValue thm15;
};

inline std::vector<ScanRow> scan(const ScanGrid& g) {
  std::vector<ScanRow> rows;
  for (const double rho : g.rho.values())
    for (const double alpha : g.alpha.values())
      for (const double beta : g.beta_tracks_alpha ? std::vector<double>{alpha} : g.beta.values()) {
        const DensityPoint p{rho, alpha, beta};
        rows.push_back({fact13_bounds(p), thm_value(p, Theorem::t14), thm_value(p, Theorem::t15)});
      }
  return rows;
}

namespace detail {
inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}
}  // namespace detail

inline void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << "rho,alpha,beta,quasi_star,g1,g2,max,argmax,thm14,thm14_in_range,thm15,thm15_winner,thm15_in_range\n";
  for (const auto& r : rows) {
    const auto& b = r.bounds;
    os << detail::fmt(b.point.rho) << ',' << detail::fmt(b.point.alpha) << ',' << detail::fmt(b.point.beta) << ','
       << detail::fmt(b.quasi_star_value) << ',' << (b.g1_value ? detail::fmt(*b.g1_value) : "undefined") << ','
       << detail::fmt(b.g2_value) << ',' << detail::fmt(b.max_value) << ',' << b.argmax << ','
       << detail::fmt(r.thm14.value) << ',' << (r.thm14.in_range ? 1 : 0) << ',' << detail::fmt(r.thm15.value)
       << ',' << r.thm15.winner << ',' << (r.thm15.in_range ? 1 : 0) << '\n';
  }
}

inline void write_convergence_csv(std::ostream& os, const ConvergenceReport& rep) {
  os << "family,n,m,l,k,edge_density,cherry_density,formula,error,n_times_error\n";
  for (const auto& r : rep.rows)
    os << to_string(r.family) << ',' << r.n << ',' << r.m << ',' << r.l << ',' << r.k << ','
       << detail::fmt(r.edge_density.value()) << ',' << detail::fmt(r.cherry_density.value()) << ','
       << detail::fmt(r.formula) << ',' << detail::fmt(r.error) << ','
       << detail::fmt(r.error * static_cast<double>(r.n)) << '\n';
  os << "# fitted_C," << detail::fmt(rep.fitted_c) << ",max_C," << detail::fmt(rep.max_c) << ",monotone,"
     << (rep.monotone ? 1 : 0) << '\n';
}

}  // namespace cherry
