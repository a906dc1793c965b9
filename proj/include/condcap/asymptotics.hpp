#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "condcap/errors.hpp"
#include "condcap/nome.hpp"

namespace condcap {

struct SeriesTerm {
  std::string label;
  double value;
};

/// Asymptotic expansion split into its terms.
struct SeriesBreakdown {
  std::vector<SeriesTerm> terms;
  double total = 0.0;
  std::string remainder;
  std::string warning;  // empty when the gap is small relative to the arcs

  void add(std::string label, double v) {
    terms.push_back({std::move(label), v});
    total += v;
  }
  double term(std::size_t i) const { return terms.at(i).value; }
};

inline constexpr double kRegimeRatio = 0.1;

namespace detail {

inline void check_series_input(double rho, double L, double h) {
  require(std::isfinite(rho) && rho > 0.0, ErrorKind::GeometryInvalid, "rho must be positive");
  require(std::isfinite(L) && L > 0.0 && L < 2.0 * pi * rho, ErrorKind::GeometryInvalid,
          "arc length must satisfy 0 < L < 2 pi rho");
  require(std::isfinite(h) && h > 0.0, ErrorKind::GeometryInvalid, "gap must be positive");
}

inline std::string regime_warning(double L, double h) {
  if (h < kRegimeRatio * L) return {};
  return "gap is not small compared with the plate length; the expansion is outside its asymptotic regime";
}

}  // namespace detail

/// Capacity of two concentric arcs (mid radius rho, length L, gap h),
/// seven terms with remainder O(h^2).
inline SeriesBreakdown arc_series(double rho, double L, double h) {
  detail::check_series_input(rho, L, h);
  const double lnh = -std::log(h);
  const double g = L / (2.0 * rho);
  const double sg = std::sin(g);
  const double lg = std::log(4.0 * pi * rho * sg);
  const double c1 = 1.0 / std::tan(g) / (2.0 * pi * pi * rho);
  const double d2 = 8.0 * pi * pi * pi * rho * rho * sg * sg;

  SeriesBreakdown s;
  s.add("L/h", L / h);
  s.add("(1/pi)ln(1/h)", lnh / pi);
  s.add("(1/pi)(1+ln(4 pi rho sin(L/2rho)))", (1.0 + lg) / pi);
  s.add("h ln(1/h)", c1 * h * lnh);
  s.add("h", c1 * h * (0.5 + lg));
  s.add("h^2 ln^2(1/h)", -h * h * lnh * lnh / d2);
  s.add("h^2 ln(1/h)", -h * h * lnh * (2.0 * lg - std::cos(L / rho)) / d2);
  s.remainder = "O(h^2)";
  s.warning = detail::regime_warning(std::min(L, rho), h);
  return s;
}

/// Capacity of two parallel segments of length L at distance h.
inline SeriesBreakdown linear_series(double L, double h) {
  detail::require(std::isfinite(L) && L > 0.0, ErrorKind::GeometryInvalid, "length must be positive");
  detail::require(std::isfinite(h) && h > 0.0, ErrorKind::GeometryInvalid, "gap must be positive");
  const double lnh = -std::log(h);
  const double l2 = std::log(2.0 * pi * L);
  const double p2 = pi * pi, p3 = p2 * pi;

  SeriesBreakdown s;
  s.add("L/h", L / h);
  s.add("(1/pi)ln(1/h)", lnh / pi);
  s.add("(1/pi)(1+ln(2 pi L))", (1.0 + l2) / pi);
  s.add("h ln(1/h)", h / (p2 * L) * lnh);
  s.add("h", h / (p2 * L) * (0.5 + l2));
  s.add("h^2 ln^2(1/h)", -(h * h / (2.0 * p3 * L * L)) * lnh * lnh);
  s.add("h^2 ln(1/h)", (h * h / (p3 * L * L)) * (0.5 - l2) * lnh);
  s.remainder = "O(h^2)";
  s.warning = detail::regime_warning(L, h);
  return s;
}

inline double leading_order(double L, double h) {
  detail::require(L > 0.0 && h > 0.0, ErrorKind::GeometryInvalid, "L and h must be positive");
  return L / h + std::log(1.0 / h) / pi;
}

/// Intermediate forms of the arc expansion for the unit mid radius.
namespace series_internal {

/// Capacity in terms of the half spread gamma and epsilon = R - 1.
inline double capacity_in_epsilon(double gamma, double e) {
  const double le = -std::log(e);
  const double ct = 1.0 / std::tan(gamma);
  const double sg = std::sin(gamma);
  const double l2 = std::log(2.0 * pi * sg);
  const double p2 = pi * pi, p3 = p2 * pi;
  return gamma / e + le / pi + gamma / 2.0 + (1.0 + l2) / pi + ct / p2 * e * le +
         e * (gamma / 4.0 + 1.0 / (2.0 * pi) + ct / p2 * (0.5 + l2)) - e * e * le * le / (2.0 * p3 * sg * sg) -
         e * e * le / (2.0 * p3) * (1.0 + pi * ct - ct * ct + 2.0 * l2 / (sg * sg));
}

/// Capacity in terms of gamma and delta = h / (2 rho).
inline double capacity_in_delta(double gamma, double d) {
  const double ld = -std::log(d);
  const double ct = 1.0 / std::tan(gamma);
  const double sg = std::sin(gamma);
  const double l2 = std::log(2.0 * pi * sg);
  const double p2 = pi * pi, p3 = p2 * pi;
  return gamma / d + ld / pi + (1.0 + l2) / pi + ct / p2 * d * ld + d * ct / p2 * (0.5 + l2) -
         d * d * ld * ld / (2.0 * p3 * sg * sg) - d * d * ld / (2.0 * p3 * sg * sg) * (2.0 * l2 - std::cos(2.0 * gamma));
}

}  // namespace series_internal

struct GammaSeriesState {
  double eta;
  double x;
  double z_aux;  // 2 eta x tan(eta)
  double s_aux;  // 1 / sin^2(eta)
  double sigma;  // 1 - lambda
  double beta;
};

inline GammaSeriesState gamma_series_state(double eta, double x) {
  const double z = 2.0 * eta * x * std::tan(eta);
  const double s = 1.0 / (std::sin(eta) * std::sin(eta));
  const double beta = z * (1.0 - s / 4.0) - z * z * (1.0 - s / 2.0 + s * s / 8.0) +
                      z * z * z * (1.0 - 3.0 * s / 4.0 + 3.0 * s * s / 8.0 - 5.0 * s * s * s / 64.0) -
                      z * z * z * z *
                          (1.0 - s + 3.0 * s * s / 4.0 - 5.0 * s * s * s / 16.0 + 7.0 * s * s * s * s / 128.0);
  return {eta, x, z, s, 0.5 * z * s * (1.0 - beta), beta};
}

/// Half spread gamma as a series in x = 1/(pi y) at fixed eta = y ln R / 2.
/// terms = 5 keeps every term; fewer truncates from the top.
inline double gamma_series(double eta, double x, int terms = 5, GammaSeriesState* state = nullptr) {
  detail::require(eta > 0.0 && eta < pi / 2.0, ErrorKind::ArgOutOfRange, "eta must lie in (0, pi/2)");
  detail::require(x > 0.0 && std::isfinite(x), ErrorKind::ArgOutOfRange, "x must be positive");
  detail::require(terms >= 1 && terms <= 5, ErrorKind::ArgOutOfRange, "terms must be 1..5");
  const double s2 = std::sin(2.0 * eta);
  detail::require(s2 != 0.0, ErrorKind::ArgOutOfRange, "sin(2 eta) vanishes");
  const double se = std::sin(eta);
  const double se2 = se * se;
  const double t[5] = {
      2.0 * eta,
      -2.0 * eta * x * std::log(1.0 / x) - 2.0 * eta * x * (1.0 + std::log(s2 / eta)),
      2.0 * eta * eta * x * x / std::tan(2.0 * eta),
      2.0 * std::pow(eta * x, 3) * (3.0 - 2.0 * s2 * s2) / (3.0 * s2 * s2),
      std::pow(eta * x, 4) * (25.0 + 96.0 * se2 - 48.0 * se2 * se2 - 128.0 * se2 * se2 * se2) / (12.0 * s2 * s2 * s2),
  };
  if (state) *state = gamma_series_state(eta, x);
  double g = 0.0;
  for (int i = 0; i < terms; ++i) g += t[i];
  return g;
}

/// Pi(1 - sigma, nu, k) - F(1 - sigma, k) for k -> 1 faster than sigma -> 0.
inline double pi_minus_f_asym(double sigma, double nu, double k) {
  detail::require(sigma > 0.0 && sigma < 1.0, ErrorKind::ArgOutOfRange, "sigma must lie in (0, 1)");
  detail::require(nu > 0.0 && std::isfinite(nu), ErrorKind::ArgOutOfRange, "nu must be positive");
  detail::require(k > 0.0 && k < 1.0, ErrorKind::ArgOutOfRange, "k must lie in (0, 1)");
  const double rn = std::sqrt(nu);
  return -nu / (2.0 * (1.0 + nu)) * std::log((2.0 - sigma) / sigma) + rn * std::atan((1.0 - sigma) * rn) / (1.0 + nu);
}

}  // namespace condcap
