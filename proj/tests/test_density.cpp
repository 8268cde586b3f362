#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "cherry/density.hpp"
#include "naive.hpp"

using namespace cherry;

TEST(Fact13, BetaZero) {
  for (const double rho : {0.1, 0.5, 0.68, 0.9})
    for (const double alpha : {0.0, 0.2, 0.3}) {
      const auto b = fact13_bounds({rho, alpha, 0.0});
      EXPECT_NEAR(b.quasi_star_value, 2 * rho - 1 + std::pow(1 - rho, 1.5), 1e-15);
      ASSERT_TRUE(b.g1_value);
      EXPECT_NEAR(*b.g1_value, std::pow(rho, 1.5), 1e-15);
      EXPECT_NEAR(b.g2_value, alpha * alpha * alpha + (rho - alpha * alpha) * std::sqrt(rho + alpha * alpha), 1e-15);
    }
}

TEST(Fact13, FullDensityTies) {
  const auto b = fact13_bounds({1.0, 0.0, 0.0});
  EXPECT_DOUBLE_EQ(b.quasi_star_value, 1.0);
  EXPECT_DOUBLE_EQ(*b.g1_value, 1.0);
  EXPECT_DOUBLE_EQ(b.g2_value, 1.0);
  EXPECT_DOUBLE_EQ(b.max_value, 1.0);
  EXPECT_EQ(b.argmax.rfind("tie", 0), 0u) << b.argmax;
}

TEST(Fact13, CornerPointMargin) {
  const auto b = fact13_bounds({17.0 / 25, 23.0 / 100, 23.0 / 100});
  const double expected = (6271 * std::sqrt(7329.0) - 347833) / 1e6 - 16 * std::sqrt(2.0) / 125;
  EXPECT_NEAR(b.g2_value - b.quasi_star_value, expected, 1e-12);
  EXPECT_GT(expected, 0);
}

TEST(Fact13, MiddleTermUndefinedBelowFloor) {
  const auto b = fact13_bounds({0.1, 0.4, 0.4});
  EXPECT_FALSE(b.g1_value);
  EXPECT_FALSE(b.g1_realizable);
  EXPECT_THROW(fact13_bounds({1.2, 0.1, 0.1}), std::domain_error);
  EXPECT_THROW(fact13_bounds({0.5, -0.1, 0.1}), std::domain_error);
}

TEST(Fact13, MonotoneInRho) {
  const double h = 1e-6;
  for (int i = 1; i < 99; ++i)
    for (int j = 0; j <= 10; ++j)
      for (int t = 0; t <= 10; ++t) {
        const double rho = i / 100.0, alpha = j / 20.0, beta = t / 20.0;
        const DensityPoint lo{rho, alpha, beta}, hi{rho + h, alpha, beta};
        if (rho < alpha * alpha) continue;
        const auto a = fact13_bounds(lo), b = fact13_bounds(hi);
        ASSERT_GT(b.quasi_star_value, a.quasi_star_value);
        ASSERT_GT(b.g2_value, a.g2_value);
        if (a.g1_value && b.g1_value && rho > 2 * alpha * beta + beta * beta + h) {
          ASSERT_GT(*b.g1_value, *a.g1_value);
        }
      }
}

TEST(ThmValue, Examples) {
  const auto v = thm_value({0.68, 0.2, 0.2}, Theorem::t14);
  EXPECT_DOUBLE_EQ(v.value, 0.008 + 0.64 * std::sqrt(0.72));
  EXPECT_TRUE(v.in_range);
  EXPECT_FALSE(thm_value({0.5, 0.2, 0.2}, Theorem::t14).in_range);
  EXPECT_FALSE(thm_value({0.68, 0.2, 0.1}, Theorem::t14).in_range);

  for (const double alpha : {1.0 / 3, 2.0 / 5}) {
    const auto w = thm_value({0.68, alpha, 0.2}, Theorem::t15);
    EXPECT_TRUE(w.in_range);
    const double qs = quasi_star_density(0.68), g2 = g2_density({0.68, alpha, 0.2});
    EXPECT_DOUBLE_EQ(w.value, std::max(qs, g2));
    EXPECT_EQ(w.winner, qs > g2 ? "quasi_star" : "g2");
  }
  EXPECT_THROW(theorem_from_string("1.6"), std::invalid_argument);
}

TEST(ConstructionDensity, MatchesMaterializedGraphs) {
  for (const count_t n : {30, 60, 90}) {
    const DensityPoint p{0.68, 0.2, 0.2};
    const auto c = construction_density(n, p, DensityFamily::g2);
    const auto g = g2_family(static_cast<int>(n), c.m, static_cast<int>(c.l), static_cast<int>(c.k),
                             RemainderPolicy::split);
    const auto a = naive::adjacency(g);
    EXPECT_EQ(c.cherries, naive::cherries(a));
    EXPECT_EQ(c.edges, naive::edges(a));
    EXPECT_EQ(c.cherry_density, Rational::make(naive::cherries(a), 3 * choose3(n)));

    const auto q = construction_density(n, {0.5, 0, 0}, DensityFamily::quasi_star);
    EXPECT_EQ(q.cherries, naive::cherries(naive::adjacency(quasi_star(static_cast<int>(n), q.m))));

    const DensityPoint t{0.68, 0.2, 0.35};
    const auto c1 = construction_density(n, t, DensityFamily::g1);
    const auto g1 = g1_family(static_cast<int>(n), c1.m, static_cast<int>(c1.l), static_cast<int>(c1.k));
    EXPECT_EQ(c1.cherries, naive::cherries(naive::adjacency(g1)));
  }
}

TEST(ConstructionDensity, RoundingPolicy) {
  const auto c = construction_density(101, {0.5, 0.205, 0.2}, DensityFamily::g2);
  EXPECT_EQ(c.m, std::llround(0.5 * 5050));
  EXPECT_EQ(c.l, 21);
  EXPECT_EQ(c.k, 20);
  EXPECT_THROW(construction_density(2, {0.5, 0, 0}, DensityFamily::quasi_star), undefined_density);
  EXPECT_THROW(construction_density(kMaxDensityOrder + 1, {0.5, 0, 0}, DensityFamily::quasi_star),
               std::invalid_argument);
}

TEST(Convergence, AcceptancePoints) {
  const std::vector<count_t> ns{100, 500, 2000};
  const auto g2 = converge(DensityFamily::g2, {0.68, 0.2, 0.2}, ns);
  EXPECT_TRUE(g2.monotone);
  EXPECT_LT(g2.rows.back().error, 5e-3);
  EXPECT_GT(g2.fitted_c, 0);

  const auto qs = converge(DensityFamily::quasi_star, {0.5, 0, 0}, ns);
  EXPECT_TRUE(qs.monotone);
  EXPECT_LT(qs.rows.back().error, 5e-3);

  // the transposed middle-term point fits inside [n]
  const auto g1 = converge(DensityFamily::g1, {0.68, 0.2, 0.35}, ns);
  EXPECT_TRUE(g1.monotone);
  EXPECT_LT(g1.rows.back().error, 5e-3);
}

TEST(Convergence, MiddleTermCollisionIsReported) {
  // l = 0.35 n witness vertices leave too few slots for the clique at rho = 0.68
  EXPECT_THROW(construction_density(2000, {0.68, 0.35, 0.2}, DensityFamily::g1), index_collision);
  EXPECT_FALSE(fact13_bounds({0.68, 0.35, 0.2}).g1_realizable);
  EXPECT_TRUE(fact13_bounds({0.68, 0.2, 0.35}).g1_realizable);
}

TEST(Convergence, LargeOrderIsExact) {
  const auto c = construction_density(kMaxDensityOrder, {0.68, 0.2, 0.2}, DensityFamily::g2);
  EXPECT_EQ(c.edges, c.m);
  EXPECT_LT(c.error, 1e-5);
}

TEST(Scan, TheoremRectangle) {
  ScanGrid g;
  g.rho = parse_axis("0.68:0.70:0.005");
  g.alpha = parse_axis("0.17:0.23:0.005");
  g.beta_tracks_alpha = true;
  const auto rows = scan(g);
  EXPECT_EQ(rows.size(), 5u * 13u);
  for (const auto& r : rows) {
    EXPECT_GT(r.bounds.g2_value, r.bounds.quasi_star_value);
    EXPECT_TRUE(r.thm14.in_range);
  }
}

TEST(Scan, SinglePointAndCsv) {
  ScanGrid g;
  g.rho = parse_axis("0.5");
  g.alpha = parse_axis("0.1");
  g.beta = parse_axis("0.1");
  const auto rows = scan(g);
  ASSERT_EQ(rows.size(), 1u);
  std::ostringstream os;
  write_scan_csv(os, rows);
  const std::string csv = os.str();
  EXPECT_EQ(csv.substr(0, 15), "rho,alpha,beta,");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
}

TEST(Scan, AxisParsing) {
  EXPECT_EQ(parse_axis("0.1:0.3:0.1").values().size(), 3u);
  EXPECT_THROW(parse_axis("0.1:0.3"), std::invalid_argument);
  EXPECT_THROW(parse_axis("abc"), std::invalid_argument);
  EXPECT_THROW(parse_axis("0.3:0.1:0.1"), std::invalid_argument);
  EXPECT_THROW(parse_axis("0.1:0.3:0"), std::invalid_argument);
}

TEST(Families, NamesRoundTrip) {
  for (const auto f : {DensityFamily::quasi_star, DensityFamily::g1, DensityFamily::g2})
    EXPECT_EQ(density_family_from_string(to_string(f)), f);
  EXPECT_THROW(density_family_from_string("g3"), std::invalid_argument);
}
