#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "condcap/asymptotics.hpp"
#include "condcap/exact_capacity.hpp"
#include "condcap/verify/quadrature.hpp"

using namespace condcap;

namespace {

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::log(x[i]), b = std::log(y[i]);
    sx += a, sy += b, sxx += a * a, sxy += a * b;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST(ArcSeries, LeadingTerms) {
  const SeriesBreakdown s = arc_series(1.0, pi, 1e-3);
  ASSERT_EQ(s.terms.size(), 7u);
  EXPECT_DOUBLE_EQ(s.term(0), pi / 1e-3);
  EXPECT_NEAR(s.term(1), std::log(1e3) / pi, 1e-14);
  EXPECT_NEAR(s.term(2), (1.0 + std::log(4.0 * pi)) / pi, 1e-14);
  // cot(pi/2) = 0 kills the O(h) pair.
  EXPECT_NEAR(s.term(3), 0.0, 1e-18);
  EXPECT_EQ(s.remainder, "O(h^2)");
  EXPECT_TRUE(s.warning.empty());
  double sum = 0.0;
  for (const auto& t : s.terms) sum += t.value;
  EXPECT_DOUBLE_EQ(sum, s.total);
}

TEST(ArcSeries, LargeRadiusReducesToLinear) {
  const double L = 1.3, h = 1e-2;
  const SeriesBreakdown a = arc_series(1e8, L, h), l = linear_series(L, h);
  EXPECT_NEAR(a.term(2), l.term(2), 1e-12);
  EXPECT_NEAR(a.term(3), l.term(3), 1e-10);
  EXPECT_NEAR(a.term(4), l.term(4), 1e-10);
  EXPECT_NEAR(a.total, l.total, 1e-9);
}

TEST(ArcSeries, DeltaFormAgreesToSecondOrder) {
  // The two forms regroup logarithms; they differ by a pure d^2 constant.
  for (double rho : {0.7, 1.0, 3.0})
    for (double h : {1e-2, 1e-4}) {
      const double L = 2.0;
      const double g = L / (2.0 * rho), d = h / (2.0 * rho);
      EXPECT_LT(std::abs(series_internal::capacity_in_delta(g, d) - arc_series(rho, L, h).total), d * d);
    }
}

TEST(ArcSeries, EpsilonFormCarriesFirstOrderSlip) {
  // Exact minus epsilon form tends to -gamma eps / 3.
  const double g = 1.0;
  for (double e : {1e-3, 1e-4}) {
    const double ex = solve_capacity(g, 1.0 + e).value;
    const double d = ex - series_internal::capacity_in_epsilon(g, e);
    EXPECT_NEAR(d / (-g * e / 3.0), 1.0, 0.05) << e;
  }
}

TEST(ArcSeries, Warning) {
  EXPECT_FALSE(arc_series(1.0, 1.0, 0.5).warning.empty());
  EXPECT_TRUE(arc_series(1.0, 1.0, 0.05).warning.empty());
  EXPECT_FALSE(linear_series(1.0, 0.5).warning.empty());
  EXPECT_THROW(arc_series(1.0, 7.0, 0.1), Error);
  EXPECT_THROW(arc_series(1.0, 1.0, 0.0), Error);
}

TEST(ArcSeries, ObservedOrderAgainstSolver) {
  std::vector<double> hs, raw, corr;
  for (double h = 1e-2; h > 5e-5; h /= 2.5) {
    const double ex = solve_capacity(ArcCondenser{1.0, pi / 2.0, h}).value;
    const double s = arc_series(1.0, pi / 2.0, h).total;
    hs.push_back(h);
    raw.push_back(std::abs(ex - s));
    corr.push_back(std::abs(ex - s + (pi / 2.0) * h / 12.0));
  }
  EXPECT_NEAR(slope(hs, raw), 1.0, 0.1);
  EXPECT_GT(slope(hs, corr), 1.7);
}

TEST(LinearSeries, ObservedOrderAgainstSolver) {
  for (double L : {0.5, 1.0, 2.0}) {
    std::vector<double> hs, err;
    for (double h = 2e-2; h > 2e-4; h /= 2.0) {
      hs.push_back(h);
      err.push_back(std::abs(sc_solve(L, h).value - linear_series(L, h).total));
    }
    const double s = slope(hs, err);
    EXPECT_GE(s, 1.8) << L;
    EXPECT_LE(s, 2.3) << L;
  }
}

TEST(LeadingOrder, Values) {
  EXPECT_DOUBLE_EQ(leading_order(1.0, 1e-2), 100.0 + std::log(100.0) / pi);
  const double h = 1e-3;
  EXPECT_LT(std::abs(sc_solve(1.0, h).value - leading_order(1.0, h)), 1.0);
  EXPECT_THROW(leading_order(-1.0, 1.0), Error);
}

TEST(GammaSeries, LeadingTermAndLimits) {
  EXPECT_NEAR(gamma_series(0.4, 1e-12, 1), 0.8, 1e-16);
  EXPECT_NEAR(gamma_series(0.4, 1e-12), 0.8, 1e-9);
  EXPECT_THROW(gamma_series(pi / 2.0, 0.01), Error);
  EXPECT_THROW(gamma_series(0.4, 0.01, 6), Error);
}

TEST(GammaSeries, QuadraticTermVanishesAtQuarterPi) {
  const double x = 0.01;
  EXPECT_NEAR(gamma_series(pi / 4.0, x, 3) - gamma_series(pi / 4.0, x, 2), 0.0, 1e-18);
}

TEST(GammaSeries, ResidualOrderAtFixedEta) {
  for (double eta : {0.3, 0.7}) {
    std::vector<double> xs, r;
    for (double x : {4e-3, 2e-3, 1e-3}) {
      const double y = 1.0 / (pi * x), R = std::exp(2.0 * eta / y);
      xs.push_back(x);
      r.push_back(std::abs(gamma_of(R, y) - gamma_series(eta, x, 3)));
    }
    EXPECT_GT(slope(xs, r), 2.6) << eta;
  }
}

TEST(GammaSeries, StateConsistency) {
  GammaSeriesState st{};
  gamma_series(0.5, 0.01, 5, &st);
  EXPECT_DOUBLE_EQ(st.eta, 0.5);
  EXPECT_NEAR(st.z_aux, 2.0 * 0.5 * 0.01 * std::tan(0.5), 1e-17);
  EXPECT_NEAR(st.s_aux * std::sin(0.5) * std::sin(0.5), 1.0, 1e-15);
  EXPECT_GT(st.sigma, 0.0);
}

TEST(PiMinusF, AgainstQuadrature) {
  const double sigma = 1e-3, nu = 2.0;
  for (double g : {1e-6, 1e-8}) {
    const double k = 1.0 - g;
    const double e = std::abs(pi_minus_f_asym(sigma, nu, k) - verify::quad_Pi_minus_F(1.0 - sigma, nu, k));
    EXPECT_LT(e, g / sigma) << g;
  }
  EXPECT_THROW(pi_minus_f_asym(0.0, 1.0, 0.5), Error);
  EXPECT_THROW(pi_minus_f_asym(0.1, 1.0, 1.0), Error);
}

TEST(PiMinusF, ErrorIsLinearInGap) {
  std::vector<double> gs, es;
  for (double g : {1e-4, 1e-5, 1e-6}) {
    gs.push_back(g);
    es.push_back(std::abs(pi_minus_f_asym(1e-2, 1.0, 1.0 - g) - verify::quad_Pi_minus_F(1.0 - 1e-2, 1.0, 1.0 - g)));
  }
  EXPECT_NEAR(slope(gs, es), 1.0, 0.15);
}
