#pragma once

#include <cmath>
#include <string>

#include "condcap/errors.hpp"
#include "condcap/nome.hpp"

namespace condcap {

/// Two concentric circular arcs of radii rho - h/2 and rho + h/2, each of
/// length L measured on the mid circle, symmetric about the real axis.
struct ArcCondenser {
  double rho;
  double L;
  double h;
};

/// The same condenser after scaling the plates to radii 1/R and R.
struct NormalizedGeometry {
  double gamma;    // half angular spread L / (2 rho)
  double delta;    // h / (2 rho)
  double epsilon;  // R - 1
  double R;        // sqrt((1 + delta) / (1 - delta))
  double log_R;    // atanh(delta), exact to rounding even for tiny delta
};

inline NormalizedGeometry normalized_from(double gamma, double delta) {
  detail::require(gamma > 0.0 && gamma < pi, ErrorKind::GeometryInvalid, "gamma must lie in (0, pi)");
  detail::require(delta > 0.0 && delta < 1.0, ErrorKind::GeometryInvalid, "delta must lie in (0, 1)");
  const double log_R = std::atanh(delta);
  const double eps = std::expm1(log_R);
  return {gamma, delta, eps, 1.0 + eps, log_R};
}

inline NormalizedGeometry normalize(const ArcCondenser& c) {
  detail::require(std::isfinite(c.rho) && c.rho > 0.0, ErrorKind::GeometryInvalid, "rho must be positive");
  detail::require(std::isfinite(c.h) && c.h > 0.0 && c.h < 2.0 * c.rho, ErrorKind::GeometryInvalid,
                  "gap h must satisfy 0 < h < 2 rho");
  detail::require(std::isfinite(c.L) && c.L > 0.0 && c.L < 2.0 * pi * c.rho, ErrorKind::GeometryInvalid,
                  "arc length must satisfy 0 < L < 2 pi rho");
  return normalized_from(c.L / (2.0 * c.rho), c.h / (2.0 * c.rho));
}

/// Geometry given directly by the half spread and the radius ratio R.
inline NormalizedGeometry normalize_gamma_R(double gamma, double R) {
  detail::require(R > 1.0 && std::isfinite(R), ErrorKind::GeometryInvalid, "R must exceed 1");
  NormalizedGeometry g = normalized_from(gamma, std::tanh(std::log1p(R - 1.0)));
  g.R = R;
  g.epsilon = R - 1.0;
  g.log_R = std::log1p(R - 1.0);
  return g;
}

}  // namespace condcap
