#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cherry/appendix.hpp"

using namespace cherry;
using namespace cherry::appendix;

namespace {

// Independent evaluation of the A1 right-hand side minus the quasi-star side.
double a1_reference(double a, double d) {
  const double g2 = a * a * a + (2 * d - a * a) * std::sqrt(2 * d + a * a);
  const double qs = 2 * (2 * d) - 1 + std::pow(1 - 2 * d, 1.5);
  return g2 - qs;
}

}  // namespace

TEST(Appendix, CornerValue) {
  const double expected = (6271 * std::sqrt(7329.0) - 347833) / 1e6 - 16 * std::sqrt(2.0) / 125;
  EXPECT_NEAR(a1_margin(0.23, 0.34), expected, 1e-12);
  EXPECT_NEAR(a1_reference(0.23, 0.34), expected, 1e-12);
  EXPECT_GT(expected, 0);
  EXPECT_NEAR(a1_corner_closed_form(), expected, 1e-15);
}

TEST(Appendix, A2BoundaryMaximizer) {
  for (const double d : {kDLo, 0.345, kDHi})
    for (const double a : {0.17, 0.2, 0.23}) {
      const auto r = eval_f(Lemma::A2, d, a, a);
      EXPECT_NEAR(r.value, a * a * a + (2 * d - a * a) * std::sqrt(2 * d + a * a), 1e-12);
      EXPECT_NEAR(margin(Lemma::A2, d, a, a), 0, 1e-12);
    }
}

TEST(Appendix, ClosedFormsAgreeAtRandomPoints) {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(0, 1);
  for (const auto l : {Lemma::A2, Lemma::A3, Lemma::A4, Lemma::A5}) {
    double worst = 0, worst_res = 0;
    int evaluated = 0;
    for (int i = 0; i < 1000; ++i) {
      const double d = kDLo + (kDHi - kDLo) * u(rng);
      const auto ar = a_range(l);
      const double a = ar.lo + (ar.hi - ar.lo) * u(rng);
      const auto xr = x_range(l, a, d);
      if (xr.hi < xr.lo) continue;
      const double x = xr.lo + (xr.hi - xr.lo) * u(rng);
      const auto r = eval_f(l, d, a, x);
      worst = std::max(worst, std::abs(r.value - r.closed_form));
      worst_res = std::max(worst_res, std::abs(r.residual));
      ++evaluated;
    }
    EXPECT_GT(evaluated, 500) << to_string(l);
    EXPECT_LE(worst, 1e-12) << to_string(l);
    EXPECT_LE(worst_res, 1e-12) << to_string(l);
  }
}

TEST(Appendix, A5ConstraintResidual) {
  const double d = 0.345, a = 0.36;
  const auto xr = x_range(Lemma::A5, a, d);
  for (int i = 0; i <= 20; ++i) {
    const double x = xr.lo + (xr.hi - xr.lo) * i / 20;
    const auto r = eval_f(Lemma::A5, d, a, x);
    EXPECT_LE(std::abs(r.point.y * r.point.y / 2 + (1 - r.point.y) * x - d), 1e-12);
    EXPECT_GE(r.point.y, x);
  }
}

TEST(Appendix, AnalyticDerivativesMatchFiniteDifferences) {
  const double h = 1e-5;
  for (const auto l : {Lemma::A2, Lemma::A3, Lemma::A4, Lemma::A5}) {
    const double d = 0.345;
    const auto ar = a_range(l);
    const double a = (ar.lo + ar.hi) / 2;
    const auto xr = x_range(l, a, d);
    for (int order = 1; order <= 2; ++order)
      for (int i = 1; i < 10; ++i) {
        const double x = xr.lo + (xr.hi - xr.lo) * i / 10;
        const auto exact = f_derivative(l, order, a, d, x);
        if (!exact) continue;
        auto f = [&](double t) { return f_closed(l, a, d, t); };
        const double fd = order == 1 ? (f(x + h) - f(x - h)) / (2 * h) : (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
        EXPECT_NEAR(*exact, fd, order == 1 ? 1e-7 : 1e-3) << to_string(l) << " order " << order << " x " << x;
      }
  }
}

TEST(Appendix, DomainErrors) {
  EXPECT_THROW(eval_f(Lemma::A2, 0.3, 0.2, 0.1), std::domain_error);
  EXPECT_THROW(eval_f(Lemma::A2, 0.345, 0.3, 0.1), std::domain_error);
  EXPECT_THROW(eval_f(Lemma::A2, 0.345, 0.2, 0.25), std::domain_error);
  EXPECT_THROW(eval_f(Lemma::A1, 0.345, 0.2, 0.0), std::invalid_argument);
  EXPECT_THROW(check_lemma(Lemma::A1, 5), std::invalid_argument);
  EXPECT_THROW(lemma_from_string("A6"), std::invalid_argument);
}

TEST(Appendix, AllLemmasPassOnGrid) {
  for (const auto l : {Lemma::A1, Lemma::A2, Lemma::A3, Lemma::A4, Lemma::A5}) {
    const auto rep = check_lemma(l, 50);
    EXPECT_TRUE(rep.passed) << to_string(l);
    EXPECT_GE(rep.min_margin, -kSlack) << to_string(l);
    EXPECT_EQ(rep.derivative_violations, 0) << to_string(l);
    EXPECT_LE(rep.max_closed_form_gap, 1e-12) << to_string(l);
    EXPECT_LE(rep.max_residual, 1e-12) << to_string(l);
    EXPECT_GT(rep.nodes, 0) << to_string(l);
  }
}

TEST(Appendix, A1MinimumAtCorner) {
  const auto rep = check_lemma(Lemma::A1, 50);
  EXPECT_NEAR(rep.min_margin, a1_corner_closed_form(), 1e-12);
  EXPECT_NEAR(rep.min_at.a, 0.23, 1e-12);
  EXPECT_NEAR(rep.min_at.d, 0.34, 1e-12);
}

TEST(Appendix, A4RegionBound) {
  const auto rep = check_lemma(Lemma::A4, 50);
  EXPECT_LE(rep.region_x_step, 0.002);
  EXPECT_GE(rep.region_min, kA4RegionBound - 1e-4);
}

TEST(Appendix, InteriorBounds) {
  const auto checks = interior_bounds_check();
  EXPECT_GE(checks.size(), 3u);
  for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << " margin " << c.margin;
  EXPECT_NEAR(checks[0].value, (54 - std::sqrt(2671.0)) / 100, 1e-15);
  EXPECT_GT(checks[0].value, 0.02);
}

TEST(Appendix, ReportJson) {
  const auto j = to_json(check_lemma(Lemma::A2, 20));
  EXPECT_EQ(j["lemma"], "A2");
  EXPECT_TRUE(j["passed"].get<bool>());
}
