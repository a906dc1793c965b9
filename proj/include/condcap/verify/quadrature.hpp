#pragma once

#include <cmath>
#include <limits>
#include <queue>

#include "condcap/errors.hpp"
#include "condcap/nome.hpp"

// Independent reference values for the elliptic integrals: adaptive
// Gauss-Kronrod 7-15 on the angle theta with t = sin(theta).  Used only by
// tests and the acceptance suite.

namespace condcap::verify {

namespace gk {

inline constexpr double xk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                 0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                 0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double wk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                 0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                 0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                 0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void segment(F& f, double a, double b, double& kron, double& err) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double k = fc * wk[7], g = fc * wg[3];
  for (int i = 0; i < 7; ++i) {
    const double v = f(c - h * xk[i]) + f(c + h * xk[i]);
    k += wk[i] * v;
    if (i % 2 == 1) g += wg[i / 2] * v;
  }
  kron = k * h;
  err = std::abs((k - g) * h);
}

struct Piece {
  double a, b, value, err;
  bool operator<(const Piece& o) const { return err < o.err; }
};

// Global adaptive bisection of the piece with the largest error estimate.
template <class F>
double adapt(F& f, double a, double b, double tol, int max_pieces) {
  std::priority_queue<Piece> heap;
  double k, e;
  segment(f, a, b, k, e);
  heap.push({a, b, k, e});
  double err = e;
  while (err > tol && static_cast<int>(heap.size()) < max_pieces) {
    const Piece p = heap.top();
    if (p.err <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(p.value)) break;
    heap.pop();
    const double m = 0.5 * (p.a + p.b);
    double k1, e1, k2, e2;
    segment(f, p.a, m, k1, e1);
    segment(f, m, p.b, k2, e2);
    heap.push({p.a, m, k1, e1});
    heap.push({m, p.b, k2, e2});
    err += e1 + e2 - p.err;
  }
  double sum = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    heap.pop();
  }
  return sum;
}

}  // namespace gk

/// Integral of f over [a, b] to absolute tolerance tol.
template <class F>
double integrate(F f, double a, double b, double tol = 1e-15) {
  if (a == b) return 0.0;
  return gk::adapt(f, a, b, tol, 4000);
}

inline double quad_K(double k) {
  return integrate([k](double th) { const double s = std::sin(th); return 1.0 / std::sqrt(1.0 - k * k * s * s); },
                   0.0, pi / 2.0);
}

inline double quad_E_complete(double k) {
  return integrate([k](double th) { const double s = std::sin(th); return std::sqrt(1.0 - k * k * s * s); }, 0.0,
                   pi / 2.0);
}

inline double quad_F(double x, double k) {
  return integrate([k](double th) { const double s = std::sin(th); return 1.0 / std::sqrt(1.0 - k * k * s * s); },
                   0.0, std::asin(x));
}

inline double quad_E(double x, double k) {
  return integrate([k](double th) { const double s = std::sin(th); return std::sqrt(1.0 - k * k * s * s); }, 0.0,
                   std::asin(x));
}

inline double quad_Pi(double x, double nu, double k) {
  return integrate(
      [k, nu](double th) {
        const double s2 = std::sin(th) * std::sin(th);
        return 1.0 / ((1.0 + nu * s2) * std::sqrt(1.0 - k * k * s2));
      },
      0.0, std::asin(x));
}

/// Pi(x, nu, k) - F(x, k) integrated directly, free of cancellation.
inline double quad_Pi_minus_F(double x, double nu, double k) {
  return integrate(
      [k, nu](double th) {
        const double s2 = std::sin(th) * std::sin(th);
        return -nu * s2 / ((1.0 + nu * s2) * std::sqrt(1.0 - k * k * s2));
      },
      0.0, std::asin(x), 1e-16);
}

}  // namespace condcap::verify
