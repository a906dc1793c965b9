#pragma once

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "condcap/arc_map.hpp"
#include "condcap/asymptotics.hpp"
#include "condcap/elliptic.hpp"
#include "condcap/exact_capacity.hpp"
#include "condcap/oracle_fd.hpp"
#include "condcap/theta.hpp"
#include "condcap/verify/quadrature.hpp"

namespace condcap::verify {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

/// Least-squares slope of log|y| against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(x[i]);
    my += std::log(std::abs(y[i]));
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(std::abs(y[i])) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

inline std::vector<double> logspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a * std::pow(b / a, static_cast<double>(i) / (n - 1));
  v.back() = b;
  return v;
}

inline std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

inline std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

struct Check {
  bool ok = true;
  std::string notes;
  void expect(bool cond, const std::string& what) {
    if (!notes.empty()) notes += "; ";
    notes += what;
    if (!cond) {
      ok = false;
      notes += " [FAIL]";
    }
  }
};

inline Check c1_arc_order() {
  Check c;
  std::vector<double> hs = logspace(1e-4, 1e-2, 12), err;
  for (double h : hs)
    err.push_back(std::abs(solve_capacity(ArcCondenser{1.0, pi / 2.0, h}).value - arc_series(1.0, pi / 2.0, h).total));
  const double s = loglog_slope(hs, err);
  c.expect(s >= 1.8 && s <= 2.3, fmt("slope=%.4f want [1.8,2.3]", s));
  c.notes += fmt(", err(1e-4)=%.3g err(1e-2)=%.3g", err.front(), err.back());
  return c;
}

inline Check c2_linear_order() {
  Check c;
  std::vector<double> hs = logspace(1e-4, 1e-2, 12), err;
  for (double h : hs) err.push_back(std::abs(sc_solve(1.0, h).value - linear_series(1.0, h).total));
  const double s = loglog_slope(hs, err);
  c.expect(s >= 1.8 && s <= 2.3, fmt("slope=%.4f want [1.8,2.3]", s));
  c.notes += fmt(", err(1e-4)=%.3g err(1e-2)=%.3g", err.front(), err.back());
  return c;
}

inline Check c3_large_radius_bridge() {
  Check c;
  const SeriesBreakdown a = arc_series(1e6, 1.0, 1e-3);
  const SeriesBreakdown l = linear_series(1.0, 1e-3);
  double worst = 0.0;
  for (std::size_t i = 0; i < 7; ++i)
    worst = std::max(worst, std::abs(a.term(i) - l.term(i)) / std::abs(l.term(i)));
  c.expect(worst < 1e-5, fmt("max term rel diff=%.3g", worst));
  const double ya = solve_capacity(ArcCondenser{1e6, 1.0, 1e-3}).value;
  const double yl = sc_solve(1.0, 1e-3).value;
  const double rel = std::abs(ya - yl) / yl;
  c.expect(rel < 1e-8, fmt("arc vs linear solver rel diff=%.3g", rel));
  return c;
}

inline Check c4_round_trip() {
  Check c;
  double worst = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const double g = 0.2 + 2.8 * i / 4.0;
      const double R = 1.01 + 0.99 * j / 4.0;
      const double y = solve_capacity(g, R).value;
      worst = std::max(worst, std::abs(gamma_of(R, y) - g));
    }
  c.expect(worst < 1e-10, fmt("max |gamma_of(solve) - gamma|=%.3g", worst));
  return c;
}

inline Check c5_map_geometry() {
  Check c;
  const double R = 1.5, y = 2.0;
  const RectangleMapParams p = RectangleMapParams::from_capacity(y, R);
  const BoundaryTrace tr = trace_boundary(p, 1000);
  double outer = 0.0, inner = 0.0, shift = 0.0;
  for (std::size_t i = 0; i < tr.outer_arc.size(); ++i) {
    outer = std::max(outer, std::abs(std::abs(tr.outer_arc[i]) - R));
    inner = std::max(inner, std::abs(std::abs(tr.inner_arc[i] * R) - 1.0));
    shift = std::max(shift, std::abs(tr.inner_arc[i] * R * R - tr.outer_arc[i]) / std::abs(tr.outer_arc[i]));
  }
  c.expect(outer < 1e-11, fmt("max ||z|-R|=%.3g", outer));
  c.expect(inner < 1e-11, fmt("max ||zR|-1|=%.3g", inner));
  c.expect(shift < 1e-11, fmt("max rel |z(u+i w2) R^2 - z(u)|=%.3g", shift));
  const double d = std::abs(tr.gamma_est - gamma_of(R, y));
  c.expect(d < 1e-9, fmt("|gamma_est - gamma_of|=%.3g", d));
  return c;
}

inline Check c6_pi_map_identity() {
  Check c;
  const double R = 1.3, y = 4.0;
  const EllipticContext ctx = EllipticContext::from_capacity(y, std::log(R));
  const JacobiImagValues j = jacobi_imag(ctx.alpha, ctx.moduli);
  const RectangleMapParams p{ctx.omega1, ctx.omega2, R};
  double worst = 0.0;
  for (double f : {0.2, 0.5, 0.8}) {
    const double u = f * ctx.K();
    const double rhs = 0.5 * std::arg(map_z(complex(u, 0.0), p)) + u * j.z_over_i;
    worst = std::max(worst, std::abs(pi_special(u, ctx) - rhs));
  }
  c.expect(worst < 1e-10, fmt("max identity mismatch=%.3g", worst));
  return c;
}

inline Check c7_special_functions() {
  Check c;
  double leg = 0.0;
  for (double k : {0.1, 0.5, 0.8, 0.95, 0.999}) {
    const double kp = std::sqrt(1.0 - k * k);
    const double K = complete_K(k), Kp = complete_K(kp), E = complete_E(k), Ep = complete_E(kp);
    leg = std::max(leg, std::abs(E * Kp + Ep * K - K * Kp - pi / 2.0));
  }
  c.expect(leg < 1e-12, fmt("Legendre=%.3g", leg));

  double quartic = 0.0;
  for (double q : {0.01, 0.05, 0.1, 0.3, 0.6}) {
    const double t2 = theta(2, 0.0, q).real(), t3 = theta(3, 0.0, q).real(), t4 = theta(4, 0.0, q).real();
    quartic = std::max(quartic, std::abs(std::pow(t2, 4) + std::pow(t4, 4) - std::pow(t3, 4)) / std::pow(t3, 4));
  }
  c.expect(quartic < 1e-12, fmt("quartic=%.3g", quartic));

  double nome_gap = 0.0;
  for (double q : {0.35, 0.5, 0.65, 0.8, 0.95}) {
    const double lq = std::log(q);
    // Points near the peak of each function keep the direct series well conditioned.
    const complex peak[5] = {0.0, pi / 2.0, 0.0, 0.0, pi / 2.0};
    for (int j = 1; j <= 4; ++j)
      for (complex off : {complex(0.07, 0.03), complex(-0.11, 0.02), complex(0.0, -0.05)}) {
        const complex w = peak[j] + off;
        const auto a = detail::theta_direct(j, w, lq).value.value();
        const auto b = detail::theta_transformed(j, w, lq).value.value();
        nome_gap = std::max(nome_gap, std::abs(a - b) / std::abs(b));
      }
  }
  c.expect(nome_gap < 1e-11, fmt("direct vs transformed=%.3g", nome_gap));

  const Moduli m = moduli_from_nome(0.01);
  const double dK = std::abs(complete_K(0.8) - quad_K(0.8));
  const double dKq = std::abs(m.K - quad_K(m.k));
  const double dF = std::abs(incomplete_F(0.9, 0.95) - quad_F(0.9, 0.95));
  const double dE = std::abs(incomplete_E(0.7, 0.8) - quad_E(0.7, 0.8));
  const double dPi = std::abs(incomplete_Pi(0.8, 2.5, 0.9) - quad_Pi(0.8, 2.5, 0.9));
  c.expect(dK < 1e-13, fmt("K(0.8)=%.3g", dK));
  c.expect(dKq < 1e-12, fmt("K(q=0.01)=%.3g", dKq));
  c.expect(dF < 1e-12, fmt("F=%.3g", dF));
  c.expect(dE < 1e-12, fmt("E=%.3g", dE));
  c.expect(dPi < 1e-12, fmt("Pi=%.3g", dPi));
  return c;
}

inline Check c8_gamma_series_order() {
  Check c;
  const double R = 1.0001, lr = std::log(R);
  std::vector<double> xs, res;
  for (double y : logspace(50.0, 5000.0, 12)) {
    const double eta = 0.5 * y * lr, x = 1.0 / (pi * y);
    xs.push_back(x);
    res.push_back(std::max(std::abs(gamma_of(R, y) - gamma_series(eta, x)), 1e-300));
  }
  const double s = loglog_slope(xs, res);
  c.expect(std::abs(s - 5.0) <= 0.3, fmt("slope=%.4f want 5+-0.3", s));
  c.notes += fmt(", residual(y=50)=%.3g residual(y=5000)=%.3g", res.front(), res.back());
  return c;
}

inline Check c9_pi_minus_f() {
  Check c;
  const double sigma = 1e-3, nu = 1.0;
  std::vector<double> gaps, err;
  double worst_ratio = 0.0;
  for (double g : {1e-4, 1e-5, 1e-6, 1e-7, 1e-8}) {
    const double k = 1.0 - g;
    const double e = std::abs(pi_minus_f_asym(sigma, nu, k) - quad_Pi_minus_F(1.0 - sigma, nu, k));
    gaps.push_back(g);
    err.push_back(e);
    worst_ratio = std::max(worst_ratio, e / (g / sigma));
  }
  const double s = loglog_slope(gaps, err);
  c.expect(std::abs(s - 1.0) <= 0.2, fmt("slope=%.4f want 1+-0.2", s));
  c.expect(worst_ratio <= 1.0, fmt("max err/((1-k)/sigma)=%.3g", worst_ratio));
  return c;
}

inline Check c10_fd_oracle() {
  Check c;
  using clk = std::chrono::steady_clock;
  auto t0 = clk::now();
  FdProblem p{pi / 2.0, 1.5, 75.0, 512, 512};
  const CapacityResult fd = fd_capacity(p);
  const double t_arc = std::chrono::duration<double>(clk::now() - t0).count();
  const double ex = solve_capacity(pi / 2.0, 1.5).value;
  const double rel = std::abs(fd.value - ex) / ex;
  c.expect(rel < 0.02 && t_arc < 60.0, fmt("arc rel diff=%.3g", rel) + fmt(" (%.1fs)", t_arc));
  t0 = clk::now();
  FdProblem a{pi, std::exp(1.0), 50.0 * std::exp(1.0), 512, 512};
  const CapacityResult fa = fd_capacity(a);
  const double t_ann = std::chrono::duration<double>(clk::now() - t0).count();
  const double rel_a = std::abs(fa.value - pi) / pi;
  c.expect(rel_a < 0.01 && t_ann < 60.0, fmt("annulus rel diff=%.3g", rel_a) + fmt(" (%.1fs)", t_ann));
  return c;
}

struct Criterion {
  int id;
  const char* name;
  double time_limit;  // seconds, 0 for none
  std::function<Check()> run;
};

inline std::vector<Criterion> criteria() {
  return {
      {1, "arc series remainder order", 5.0, c1_arc_order},
      {2, "linear series remainder order", 5.0, c2_linear_order},
      {3, "large-radius limit of arc to linear", 0.0, c3_large_radius_bridge},
      {4, "capacity solver round trip", 10.0, c4_round_trip},
      {5, "rectangle map boundary geometry", 0.0, c5_map_geometry},
      {6, "third-kind integral vs map argument", 0.0, c6_pi_map_identity},
      {7, "special-function identities and quadrature", 0.0, c7_special_functions},
      {8, "gamma series residual order", 0.0, c8_gamma_series_order},
      {9, "Pi - F asymptotic error order", 0.0, c9_pi_minus_f},
      {10, "finite-difference oracle agreement", 120.0, c10_fd_oracle},
  };
}

inline CriterionResult run_criterion(const Criterion& cr) {
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r{cr.id, cr.name, false, "", 0.0};
  try {
    const Check c = cr.run();
    r.passed = c.ok;
    r.detail = c.notes;
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (cr.time_limit > 0.0 && r.seconds > cr.time_limit) {
    r.passed = false;
    r.detail += fmt("; runtime %.2fs over limit", r.seconds);
  }
  return r;
}

inline std::string format_line(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "[%s] criterion %d: ", r.passed ? "PASS" : "FAIL", r.id);
  return std::string(head) + r.name + " | " + r.detail + fmt(" | %.2fs", r.seconds);
}

}  // namespace condcap::verify
