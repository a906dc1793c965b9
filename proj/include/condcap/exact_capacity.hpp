#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "condcap/asymptotics.hpp"
#include "condcap/carlson.hpp"
#include "condcap/elliptic.hpp"
#include "condcap/errors.hpp"
#include "condcap/geometry.hpp"
#include "condcap/roots.hpp"

namespace condcap {

enum class Method { exact, sc_exact, series, oracle };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::sc_exact: return "sc_exact";
    case Method::series: return "series";
    case Method::oracle: return "oracle";
  }
  return "?";
}

struct CapacityResult {
  double value;
  Method method;
  double residual;
  int iterations;
};

/// Quantities at the extremum of |Arg z| on the outer plate.
struct SolverIntermediates {
  double lambda;  // sn(mu1, k)
  double mu1;     // F(lambda, k)
  double cn2;     // 1 - lambda^2
  double dn2;     // 1 - k^2 lambda^2
  JacobiImagValues jac;
};

namespace detail {

// Stationary point of Arg z on the bottom side.  With s, c, d the real forms
// of sn, cn, dn at i alpha and zz = Z(i alpha)/i,
//   lambda^2     = zz / (k^2 s (c d - s zz)),
//   1 - lambda^2 = d (k^2 s c - zz d) / (k^2 s (c d - s zz)),
// which follow from c^2 = 1 + s^2 and d^2 = 1 + k^2 s^2.
inline SolverIntermediates intermediates(const EllipticContext& ctx) {
  require(ctx.eta < pi / 2.0 - 1e-9, ErrorKind::OutsideLemmaRange,
          "eta=" + std::to_string(ctx.eta) + " violates eta < pi/2");
  const JacobiImagValues j = jacobi_imag(ctx.alpha, ctx.moduli);
  const double k2 = ctx.k() * ctx.k();
  const double s = j.sn_over_i, c = j.cn, d = j.dn, zz = j.z_over_i;
  const double den = k2 * s * (c * d - s * zz);
  const double lam2 = zz / den;
  require(lam2 > 0.0 && lam2 < 1.0 && std::isfinite(lam2), ErrorKind::LambdaOutOfRange,
          "lambda^2=" + std::to_string(lam2) + " outside (0, 1)");
  double cn2 = d * (k2 * s * c - zz * d) / den;
  if (!(cn2 > 0.0 && cn2 < 1.0)) cn2 = 1.0 - lam2;
  const double kp = ctx.kprime();
  const double dn2 = cn2 + kp * kp * lam2;
  const double lam = std::sqrt(lam2);
  return {lam, lam * carlson_rf(cn2, dn2, 1.0), cn2, dn2, j};
}

inline double gamma_from(const EllipticContext& ctx, const SolverIntermediates& m) {
  const JacobiImagValues& j = m.jac;
  const double x = m.lambda;
  const double f = x * carlson_rf(m.cn2, m.dn2, 1.0);
  const double pmf = Pi_minus_F_from(x, m.cn2, m.dn2, j.nu);
  return 2.0 * (j.cn * j.dn / j.sn_over_i) * pmf + 2.0 * f * j.z_over_i;
}

}  // namespace detail

inline SolverIntermediates mu1_of_log(double log_R, double y) {
  return detail::intermediates(EllipticContext::from_capacity(y, log_R));
}

inline SolverIntermediates mu1_of(double R, double y) {
  detail::require(R > 1.0, ErrorKind::ArgOutOfRange, "R must exceed 1");
  return mu1_of_log(std::log1p(R - 1.0), y);
}

/// Half angular spread gamma of the plates of a normalized condenser with
/// plate radii 1/R, R and capacity y; R is passed as ln R.
inline double gamma_of_log(double log_R, double y) {
  const EllipticContext ctx = EllipticContext::from_capacity(y, log_R);
  const double g = detail::gamma_from(ctx, detail::intermediates(ctx));
  detail::require(std::isfinite(g), ErrorKind::NonFinite, "gamma is not finite");
  return g;
}

inline double gamma_of(double R, double y) {
  detail::require(R > 1.0 && std::isfinite(R), ErrorKind::ArgOutOfRange, "R must exceed 1");
  return gamma_of_log(std::log1p(R - 1.0), y);
}

inline double gamma_of(const NormalizedGeometry& g, double y) { return gamma_of_log(g.log_R, y); }

/// Upper end of the solver bracket: eta stays a relative 1e-7 below pi/2,
/// where gamma_of still carries about nine correct digits.
inline double max_capacity(double log_R) { return pi * (1.0 - 1e-7) / log_R; }

inline CapacityResult solve_capacity(const NormalizedGeometry& geo) {
  const double target = geo.gamma;
  detail::require(target > 0.0 && target < pi - 1e-9, ErrorKind::GeometryInvalid, "gamma must lie in (0, pi)");
  const double ymax = max_capacity(geo.log_R);
  const double ymin = 1e-6;
  auto f = [&](double y) { return gamma_of_log(geo.log_R, y) - target; };

  const double y0 = std::clamp(series_internal::capacity_in_delta(target, geo.delta), 2.0 * ymin, 0.5 * ymax);
  double w = 10.0 * geo.delta / target;
  double lo = std::max(ymin, y0 * std::max(1.0 - w, 0.5)), hi = std::min(0.5 * (y0 + ymax), y0 * (1.0 + w));
  if (!(lo < hi)) lo = std::max(ymin, 0.5 * hi);
  double flo = f(lo), fhi = f(hi);
  for (int i = 0; i < 200 && flo > 0.0; ++i) {
    detail::require(lo > ymin, ErrorKind::BracketFailure, "no sign change down to y=1e-6");
    hi = lo;
    fhi = flo;
    lo = std::max(ymin, lo / 2.0);
    flo = f(lo);
  }
  for (int i = 0; i < 200 && fhi < 0.0; ++i) {
    detail::require(hi < ymax, ErrorKind::BracketFailure, "no sign change below the eta < pi/2 limit");
    lo = hi;
    flo = fhi;
    hi = std::min(hi * 2.0, 0.5 * (hi + ymax));
    if (hi > ymax * (1.0 - 1e-6)) hi = ymax;
    fhi = f(hi);
  }
  detail::require(flo <= 0.0 && fhi >= 0.0, ErrorKind::BracketFailure, "bracket expansion failed");

  // gamma must increase through the bracket for the root to be unique.
  double prev = flo;
  for (int i = 1; i <= 8; ++i) {
    const double v = f(lo + (hi - lo) * i / 8.0);
    detail::require(v >= prev, ErrorKind::BracketFailure, "gamma is not monotone on the bracket");
    prev = v;
  }

  const RootResult r = brent(f, lo, hi);
  return {r.x, Method::exact, std::abs(f(r.x)), r.iterations};
}

inline CapacityResult solve_capacity(double gamma, double R) { return solve_capacity(normalize_gamma_R(gamma, R)); }

inline CapacityResult solve_capacity(const ArcCondenser& c) { return solve_capacity(normalize(c)); }

/// Modulus data of the parallel-segment condenser of capacity y = K/K'.
struct ScState {
  double y;
  double k_sc;
  double kprime_sc;
  double K_sc;
  double E_sc;
  double phi;
  double sin2phi;
  double cos2phi;
  double lhs;  // K E(phi,k) - E F(phi,k)
};

/// sin^2 phi = (1 - E/K)/k^2, written as R_D(0, k'^2, 1) / (3K) for small k,
/// and 1 - k^2 sin^2 phi = E/K.
inline ScState sc_state(double y) {
  const Moduli m = moduli_from_nome(Nome::from_capacity(y));
  const double k2 = m.k * m.k, kp2 = m.kprime * m.kprime;
  const double E = detail::complete_E_from(k2, kp2);
  const double e_over_k = E / m.K;
  const bool small_k = k2 < 0.5;
  const double sin2 = small_k ? detail::carlson_rd(0.0, kp2, 1.0) / (3.0 * m.K) : (1.0 - e_over_k) / k2;
  const double cos2 = small_k ? 1.0 - sin2 : (e_over_k - kp2) / k2;
  const double sphi = std::sqrt(sin2);
  const double Fp = detail::F_from(sphi, cos2, e_over_k);
  const double Ep = detail::E_from(sphi, cos2, e_over_k, k2, kp2);
  ScState st{y, m.k, m.kprime, m.K, E, std::asin(std::min(1.0, sphi)), sin2, cos2, 0.0};
  st.lhs = m.K * (Ep - e_over_k * Fp);
  return st;
}

/// Capacity y = K/K' of two parallel segments of length L at distance h.
inline CapacityResult sc_solve(double L, double h) {
  detail::require(std::isfinite(L) && L > 0.0, ErrorKind::GeometryInvalid, "L must be positive");
  detail::require(std::isfinite(h) && h > 0.0, ErrorKind::GeometryInvalid, "h must be positive");
  const double rhs = pi * L / (2.0 * h);
  auto f = [&](double y) { return sc_state(y).lhs - rhs; };
  const double ymin = 1e-3, ymax = 1e12;
  const double y0 = std::clamp(linear_series(L, h).total, 2.0 * ymin, 0.5 * ymax);
  double lo = 0.5 * y0, hi = 2.0 * y0;
  double flo = f(lo), fhi = f(hi);
  for (int i = 0; i < 100 && flo > 0.0; ++i) {
    detail::require(lo > ymin, ErrorKind::BracketFailure, "sc: no sign change at small capacity");
    hi = lo;
    fhi = flo;
    lo = std::max(ymin, lo / 4.0);
    flo = f(lo);
  }
  for (int i = 0; i < 100 && fhi < 0.0; ++i) {
    detail::require(hi < ymax, ErrorKind::BracketFailure, "sc: no sign change at large capacity");
    lo = hi;
    flo = fhi;
    hi = std::min(ymax, hi * 4.0);
    fhi = f(hi);
  }
  detail::require(flo <= 0.0 && fhi >= 0.0, ErrorKind::BracketFailure, "sc: bracket expansion failed");
  const RootResult r = brent(f, lo, hi);
  return {r.x, Method::sc_exact, std::abs(f(r.x)), r.iterations};
}

}  // namespace condcap
