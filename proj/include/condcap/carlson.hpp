#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

// Carlson symmetric elliptic integrals R_F, R_C, R_D, R_J by duplication
// (B. C. Carlson, Numer. Algorithms 10 (1995) 13-26).  Used internally as
// the production route for the incomplete integrals.

namespace condcap::detail {

inline constexpr double kCarlsonTol = std::numeric_limits<double>::epsilon() * 0.01;

inline double carlson_rf(double x, double y, double z) {
  static const double tol = std::pow(3.0 * kCarlsonTol, 1.0 / 8.0);
  const double a0 = (x + y + z) / 3.0;
  double an = a0;
  double q = std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)}) / tol;
  double x0 = x, y0 = y, z0 = z, mul = 1.0;
  while (q >= mul * std::abs(an)) {
    const double lam = std::sqrt(x0) * std::sqrt(y0) + std::sqrt(y0) * std::sqrt(z0) +
                       std::sqrt(z0) * std::sqrt(x0);
    an = (an + lam) / 4.0;
    x0 = (x0 + lam) / 4.0;
    y0 = (y0 + lam) / 4.0;
    z0 = (z0 + lam) / 4.0;
    mul *= 4.0;
  }
  const double X = (a0 - x) / (mul * an);
  const double Y = (a0 - y) / (mul * an);
  const double Z = -(X + Y);
  const double e2 = X * Y - Z * Z;
  const double e3 = X * Y * Z;
  return (e3 * (6930.0 * e3 + e2 * (15015.0 * e2 - 16380.0) + 17160.0) +
          e2 * ((10010.0 - 5775.0 * e2) * e2 - 24024.0) + 240240.0) /
         (240240.0 * std::sqrt(an));
}

inline double carlson_rc(double x, double y) {
  if (x < y) return std::atan(std::sqrt((y - x) / x)) / std::sqrt(y - x);
  if (x == y) return 1.0 / std::sqrt(x);
  return std::atanh(y > 0.0 ? std::sqrt((x - y) / x) : std::sqrt(x / (x - y))) / std::sqrt(x - y);
}

inline double carlson_rd(double x, double y, double z) {
  static const double tol = std::pow(0.2 * kCarlsonTol, 1.0 / 8.0);
  const double a0 = (x + y + 3.0 * z) / 5.0;
  double an = a0;
  double q = std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)}) / tol;
  double x0 = x, y0 = y, z0 = z, mul = 1.0, s = 0.0;
  while (q >= mul * std::abs(an)) {
    const double lam = std::sqrt(x0) * std::sqrt(y0) + std::sqrt(y0) * std::sqrt(z0) +
                       std::sqrt(z0) * std::sqrt(x0);
    s += 1.0 / (mul * std::sqrt(z0) * (z0 + lam));
    an = (an + lam) / 4.0;
    x0 = (x0 + lam) / 4.0;
    y0 = (y0 + lam) / 4.0;
    z0 = (z0 + lam) / 4.0;
    mul *= 4.0;
  }
  const double X = (a0 - x) / (mul * an);
  const double Y = (a0 - y) / (mul * an);
  const double Z = -(X + Y) / 3.0;
  const double e2 = X * Y - 6.0 * Z * Z;
  const double e3 = (3.0 * X * Y - 8.0 * Z * Z) * Z;
  const double e4 = 3.0 * (X * Y - Z * Z) * Z * Z;
  const double e5 = X * Y * Z * Z * Z;
  return ((471240.0 - 540540.0 * e2) * e5 + (612612.0 * e2 - 540540.0 * e3 - 556920.0) * e4 +
          e3 * (306306.0 * e3 + e2 * (675675.0 * e2 - 706860.0) + 680680.0) +
          e2 * ((417690.0 - 255255.0 * e2) * e2 - 875160.0) + 4084080.0) /
             (4084080.0 * mul * an * std::sqrt(an)) +
         3.0 * s;
}

// p > 0 only.
inline double carlson_rj(double x, double y, double z, double p) {
  static const double tol = std::pow(0.2 * kCarlsonTol, 1.0 / 8.0);
  const double a0 = (x + y + z + 2.0 * p) / 5.0;
  double an = a0;
  const double delta = (p - x) * (p - y) * (p - z);
  double q = std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z), std::abs(a0 - p)}) / tol;
  double x0 = x, y0 = y, z0 = z, p0 = p, mul = 1.0, mul3 = 1.0, s = 0.0;
  while (q >= mul * std::abs(an)) {
    const double lam = std::sqrt(x0) * std::sqrt(y0) + std::sqrt(y0) * std::sqrt(z0) +
                       std::sqrt(z0) * std::sqrt(x0);
    const double d0 = (std::sqrt(p0) + std::sqrt(x0)) * (std::sqrt(p0) + std::sqrt(y0)) *
                      (std::sqrt(p0) + std::sqrt(z0));
    const double e0 = delta / (mul3 * d0 * d0);
    s += carlson_rc(1.0, 1.0 + e0) / (mul * d0);
    an = (an + lam) / 4.0;
    x0 = (x0 + lam) / 4.0;
    y0 = (y0 + lam) / 4.0;
    z0 = (z0 + lam) / 4.0;
    p0 = (p0 + lam) / 4.0;
    mul *= 4.0;
    mul3 *= 64.0;
  }
  const double X = (a0 - x) / (mul * an);
  const double Y = (a0 - y) / (mul * an);
  const double Z = (a0 - z) / (mul * an);
  const double P = -(X + Y + Z) / 2.0;
  const double e2 = X * Y + X * Z + Y * Z - 3.0 * P * P;
  const double e3 = X * Y * Z + 2.0 * P * (e2 + 2.0 * P * P);
  const double e4 = (2.0 * X * Y * Z + P * (e2 + 3.0 * P * P)) * P;
  const double e5 = X * Y * Z * P * P;
  return ((471240.0 - 540540.0 * e2) * e5 + (612612.0 * e2 - 540540.0 * e3 - 556920.0) * e4 +
          e3 * (306306.0 * e3 + e2 * (675675.0 * e2 - 706860.0) + 680680.0) +
          e2 * ((417690.0 - 255255.0 * e2) * e2 - 875160.0) + 4084080.0) /
             (4084080.0 * mul * an * std::sqrt(an)) +
         6.0 * s;
}

}  // namespace condcap::detail
