#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "condcap/arc_map.hpp"

using namespace condcap;

namespace {

RectangleMapParams fixture() { return RectangleMapParams::from_capacity(2.0, 1.5); }

}  // namespace

TEST(ArcMap, Preimages) {
  const auto p = fixture();
  EXPECT_DOUBLE_EQ(p.alpha_pre(), 0.5 * p.omega2 - p.omega1 * std::log(1.5) / (2.0 * pi));
  EXPECT_DOUBLE_EQ(p.beta_pre(), 0.5 * p.omega2 + p.omega1 * std::log(1.5) / (2.0 * pi));
  EXPECT_NEAR(p.alpha_pre() + p.beta_pre(), p.omega2, 1e-15);
}

TEST(ArcMap, ChartValues) {
  const auto p = fixture();
  EXPECT_LT(std::abs(map_z(0.0, p) - 1.5), 1e-14);
  EXPECT_LT(std::abs(map_z(p.omega1, p) - 1.5), 1e-13);
  EXPECT_LT(std::abs(map_z(complex(0.0, 0.5 * p.omega2), p) + 1.0), 1e-13);
  EXPECT_LT(std::abs(map_z(complex(p.omega1, 0.5 * p.omega2), p) + 1.0), 1e-13);
  EXPECT_LT(std::abs(map_z(complex(0.0, p.beta_pre()), p)), 1e-11);
  EXPECT_GT(std::abs(map_z(complex(0.0, p.alpha_pre() + 1e-6), p)), 1e4);
}

TEST(ArcMap, PoleAtAlpha) {
  const auto p = fixture();
  for (double re : {0.0, p.omega1}) {
    try {
      map_z(complex(re, p.alpha_pre()), p);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::PoleAtAlpha);
    }
  }
}

TEST(ArcMap, NomeArgumentMustMatch) {
  const auto p = fixture();
  const double q = p.nome().q();
  EXPECT_LT(std::abs(map_z(0.3, p, q) - map_z(0.3, p)), 1e-15);
  EXPECT_THROW(map_z(0.3, p, 0.5 * q), Error);
}

TEST(ArcMap, LemmaHypothesis) {
  RectangleMapParams p{2.0, 1.0, std::exp(pi * 0.5 + 0.01)};
  EXPECT_THROW(map_z(0.1, p), Error);
}

TEST(ArcMap, BoundaryTraceGeometry) {
  const auto p = fixture();
  const BoundaryTrace tr = trace_boundary(p, 400);
  ASSERT_EQ(tr.outer_arc.size(), 400u);
  for (std::size_t i = 0; i < tr.outer_arc.size(); ++i) {
    EXPECT_LT(std::abs(std::abs(tr.outer_arc[i]) - 1.5), 1e-11);
    EXPECT_LT(std::abs(std::abs(tr.inner_arc[i]) * 1.5 - 1.0), 1e-11);
    EXPECT_LT(std::abs(std::abs(tr.mid_line[i]) - 1.0), 1e-11);
    EXPECT_LT(std::abs(std::arg(tr.inner_arc[i]) - std::arg(tr.outer_arc[i])), 1e-11);
  }
  EXPECT_EQ(tr.samples.size(), 1200u);
  EXPECT_THROW(trace_boundary(p, 7), Error);
}

TEST(ArcMap, ConjugateSymmetry) {
  const auto p = fixture();
  const double l = p.omega1 / 4.0;
  EXPECT_LT(std::abs(map_z(0.5 * p.omega1 + l, p) - std::conj(map_z(0.5 * p.omega1 - l, p))), 1e-11);
}

TEST(ArcMap, TopSideIsScaledBottom) {
  const auto p = fixture();
  const double t = p.omega1 / 3.0;
  const complex top = map_z(complex(t, p.omega2), p), bottom = map_z(t, p);
  EXPECT_LT(std::abs(top * 1.5 * 1.5 - bottom) / std::abs(bottom), 1e-11);
}

TEST(ArcMap, PeriodicityAndMidLine) {
  const auto p = fixture();
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ur(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const complex u(ur(rng) * p.omega1, ur(rng) * p.omega2);
    if (std::abs(u.imag() - p.alpha_pre()) < 1e-3) continue;
    const complex z = map_z(u, p);
    EXPECT_LT(std::abs(map_z(u + p.omega1, p) - z) / std::abs(z), 1e-11);
    const double t = ur(rng) * p.omega1;
    EXPECT_NEAR(std::abs(map_z(complex(t, 0.5 * p.omega2), p)), 1.0, 1e-11);
  }
}

TEST(ArcMap, Univalence) {
  const auto p = fixture();
  std::vector<complex> img;
  for (int i = 1; i <= 40; ++i)
    for (int j = 1; j <= 40; ++j) img.push_back(map_z(complex(p.omega1 * i / 41.0, p.omega2 * j / 41.0 + 1e-7), p));
  double dmin = INFINITY;
  for (std::size_t a = 0; a < img.size(); ++a)
    for (std::size_t b = a + 1; b < img.size(); ++b) dmin = std::min(dmin, std::abs(img[a] - img[b]));
  EXPECT_GT(dmin, 0.0);
}

TEST(ArcMap, GammaEstimateRefinesGrid) {
  const auto p = fixture();
  const BoundaryTrace coarse = trace_boundary(p, 8);
  const BoundaryTrace fine = trace_boundary(p, 2000);
  EXPECT_NEAR(coarse.gamma_est, fine.gamma_est, 1e-12);
  // High-precision reference for (R = 1.5, y = 2).
  EXPECT_NEAR(fine.gamma_est, 0.378398672780437736, 1e-13);
}

TEST(ArcMap, ThinCondenserStaysAccurate) {
  // q close to 1 runs through the transformed nome.
  const auto p = RectangleMapParams::from_capacity(300.0, 1.004);
  const BoundaryTrace tr = trace_boundary(p, 64);
  for (const auto& z : tr.outer_arc) EXPECT_NEAR(std::abs(z), 1.004, 1e-12);
  EXPECT_GT(tr.gamma_est, 0.0);
}
