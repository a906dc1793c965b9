#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "condcap/carlson.hpp"
#include "condcap/errors.hpp"
#include "condcap/nome.hpp"
#include "condcap/theta.hpp"

// Complete and incomplete elliptic integrals in Legendre's algebraic form
//   F(x,k)    = int_0^x dt / sqrt((1-t^2)(1-k^2 t^2))
//   E(x,k)    = int_0^x sqrt(1-k^2 t^2) / sqrt(1-t^2) dt
//   Pi(x,nu,k) = int_0^x dt / ((1+nu t^2) sqrt((1-t^2)(1-k^2 t^2)))
// plus the nome <-> modulus relations and Jacobi functions at purely
// imaginary argument.

namespace condcap {

namespace detail {

inline double agm(double a, double b) {
  for (int i = 0; i < 64; ++i) {
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    if (std::abs(an - bn) <= 4.0 * std::numeric_limits<double>::epsilon() * an) return 0.5 * (an + bn);
    a = an;
    b = bn;
  }
  return 0.5 * (a + b);
}

/// K from the complementary modulus; stays accurate as kp -> 0.
inline double complete_K_from_complement(double kp) {
  if (kp == 0.0) return std::numeric_limits<double>::infinity();
  return pi / (2.0 * agm(1.0, kp));
}

// E(k) given k^2 and k'^2 = 1 - k^2 separately.
inline double complete_E_from(double k2, double kp2) {
  if (kp2 == 0.0) return 1.0;
  if (k2 == 0.0) return pi / 2.0;
  return carlson_rf(0.0, kp2, 1.0) - (k2 / 3.0) * carlson_rd(0.0, kp2, 1.0);
}

// Incomplete integrals from x = sin(phi), cn2 = 1 - x^2, dn2 = 1 - k^2 x^2.
inline double F_from(double x, double cn2, double dn2) { return x * carlson_rf(cn2, dn2, 1.0); }

inline double E_from(double x, double cn2, double dn2, double k2, double kp2) {
  if (cn2 == 0.0 && dn2 == 0.0) return x;  // k = 1, x = 1
  return x * (kp2 * carlson_rf(cn2, dn2, 1.0) + (k2 * kp2 / 3.0) * x * x * carlson_rd(cn2, 1.0, dn2) +
              k2 * std::sqrt(cn2) / std::sqrt(dn2));
}

// Pi(x,nu,k) - F(x,k); no cancellation between the two.
inline double Pi_minus_F_from(double x, double cn2, double dn2, double nu) {
  if (nu == 0.0 || x == 0.0) return 0.0;
  return -(nu / 3.0) * x * x * x * carlson_rj(cn2, dn2, 1.0, 1.0 + nu * x * x);
}

inline void check_modulus(double k) {
  require(k >= 0.0 && k < 1.0, ErrorKind::ArgOutOfRange,
          "modulus k=" + std::to_string(k) + " outside [0, 1)");
}

inline void check_xarg(double x) {
  require(x >= 0.0 && x <= 1.0, ErrorKind::ArgOutOfRange,
          "argument x=" + std::to_string(x) + " outside [0, 1]");
}

inline double one_minus_sq(double x) { return (1.0 - x) * (1.0 + x); }

/// sn, cn, dn at real argument u for parameter m = 1 - mc (Bulirsch 1965).
struct SnCnDn {
  double sn, cn, dn;
};

inline SnCnDn sncndn(double u, double mc) {
  static const double tol = std::sqrt(std::numeric_limits<double>::epsilon() * 0.01);
  constexpr int kMax = 13;
  SnCnDn out{0.0, 1.0, 1.0};
  if (mc == 0.0) {
    out.sn = std::tanh(u);
    out.cn = out.dn = 1.0 / std::cosh(u);
    return out;
  }
  double m[kMax], n[kMax];
  double c = 0.0;
  int l = 0;
  for (double a = 1.0; l < kMax; ++l) {
    m[l] = a;
    n[l] = mc = std::sqrt(mc);
    c = 0.5 * (a + mc);
    if (!(std::abs(a - mc) > tol * a)) {
      ++l;
      break;
    }
    mc *= a;
    a = c;
  }
  u *= c;
  double sn = std::sin(u);
  double cn = std::cos(u);
  double dn = 1.0;
  if (sn != 0.0) {
    double a = cn / sn;
    c *= a;
    while (l--) {
      const double b = m[l];
      a *= c;
      c *= dn;
      dn = (n[l] + a) / (b + a);
      a = c / b;
    }
    a = 1.0 / std::sqrt(c * c + 1.0);
    sn = sn < 0.0 ? -a : a;
    cn = c * sn;
  }
  out = {sn, cn, dn};
  return out;
}

}  // namespace detail

/// K(k) by the arithmetic-geometric mean.
inline double complete_K(double k) {
  detail::require(k >= 0.0 && k < 1.0, ErrorKind::ModulusOutOfRange,
                  "complete_K needs 0 <= k < 1, got " + std::to_string(k));
  if (k == 0.0) return pi / 2.0;
  return detail::complete_K_from_complement(std::sqrt(detail::one_minus_sq(k)));
}

inline double complete_E(double k) {
  detail::require(k >= 0.0 && k <= 1.0, ErrorKind::ModulusOutOfRange,
                  "complete_E needs 0 <= k <= 1, got " + std::to_string(k));
  return detail::complete_E_from(k * k, detail::one_minus_sq(k));
}

inline double incomplete_F(double x, double k) {
  detail::check_xarg(x);
  detail::check_modulus(k);
  if (x == 0.0) return 0.0;
  if (k == 0.0) return std::asin(x);
  if (x == 1.0) return complete_K(k);
  return detail::F_from(x, detail::one_minus_sq(x), 1.0 - k * k * x * x);
}

inline double incomplete_E(double x, double k) {
  detail::check_xarg(x);
  detail::check_modulus(k);
  if (x == 0.0) return 0.0;
  if (k == 0.0) return std::asin(x);
  if (x == 1.0) return complete_E(k);
  return detail::E_from(x, detail::one_minus_sq(x), 1.0 - k * k * x * x, k * k, detail::one_minus_sq(k));
}

inline double incomplete_Pi(double x, double nu, double k) {
  detail::check_xarg(x);
  detail::check_modulus(k);
  detail::require(std::isfinite(nu), ErrorKind::ArgOutOfRange, "characteristic must be finite");
  detail::require(1.0 + nu * x * x > 0.0, ErrorKind::CharacteristicPole,
                  "1 + nu t^2 vanishes on [0, x]");
  if (x == 0.0) return 0.0;
  const double cn2 = detail::one_minus_sq(x);
  const double dn2 = 1.0 - k * k * x * x;
  const double f = (k == 0.0) ? std::asin(x) : (x == 1.0 ? complete_K(k) : detail::F_from(x, cn2, dn2));
  return f + detail::Pi_minus_F_from(x, cn2, dn2, nu);
}

/// Jacobi sn, cn, dn at real u with modulus k.
inline detail::SnCnDn jacobi_real(double u, double k) {
  detail::require(k >= 0.0 && k <= 1.0, ErrorKind::ArgOutOfRange, "modulus outside [0, 1]");
  return detail::sncndn(u, detail::one_minus_sq(k));
}

/// Moduli and quarter periods attached to one nome.
struct Moduli {
  Nome nome;
  double k;
  double kprime;
  double K;
  double Kprime;
};

/// k = theta_2^2/theta_3^2, k' = theta_4^2/theta_3^2, K = (pi/2) theta_3^2,
/// K' = K ln(1/q) / pi, all at zero argument.  For q > 0.5 the thetas are
/// evaluated in the transformed nome, so k' keeps relative precision even
/// when it is far below 1e-16.
inline Moduli moduli_from_nome(const Nome& nome) {
  detail::require(std::isfinite(nome.log_q()), ErrorKind::NomeOutOfRange, "moduli need q > 0");
  const auto t2 = detail::theta_scaled(2, 0.0, nome);
  const auto t3 = detail::theta_scaled(3, 0.0, nome);
  const auto t4 = detail::theta_scaled(4, 0.0, nome);
  const double r2 = (t2.mantissa / t3.mantissa).real();
  const double r4 = (t4.mantissa / t3.mantissa).real();
  Moduli m{nome, 0.0, 0.0, 0.0, 0.0};
  m.k = r2 * r2 * std::exp(2.0 * (t2.log_scale - t3.log_scale).real());
  m.kprime = r4 * r4 * std::exp(2.0 * (t4.log_scale - t3.log_scale).real());
  const double t3sq = (t3.mantissa * t3.mantissa).real() * std::exp(2.0 * t3.log_scale.real());
  m.K = pi / 2.0 * t3sq;
  m.Kprime = m.K * (-nome.log_q()) / pi;
  return m;
}

inline Moduli moduli_from_nome(double q) {
  detail::require(q > 0.0 && q < 1.0, ErrorKind::NomeOutOfRange, "moduli_from_nome needs 0 < q < 1");
  return moduli_from_nome(Nome::from_q(q));
}

inline Moduli moduli_from_modulus(double k) {
  detail::require(k > 0.0 && k < 1.0, ErrorKind::ModulusOutOfRange, "modulus must lie in (0, 1)");
  const double kp = std::sqrt(detail::one_minus_sq(k));
  const double K = detail::complete_K_from_complement(kp);
  const double Kp = detail::complete_K_from_complement(k);
  return Moduli{Nome::from_log(-pi * Kp / K), k, kp, K, Kp};
}

/// Every nome/modulus/period quantity attached to a capacity value y and a
/// plate radius ratio R (passed as ln R).
struct EllipticContext {
  double y;
  Moduli moduli;
  double omega1;
  double omega2;
  double alpha;  // K ln R / pi
  double eta;    // y ln R / 2
  double x;      // 1 / (pi y)
  double log_R;

  const Nome& nome() const { return moduli.nome; }
  double k() const { return moduli.k; }
  double kprime() const { return moduli.kprime; }
  double K() const { return moduli.K; }
  double Kprime() const { return moduli.Kprime; }

  static EllipticContext from_capacity(double y, double log_R) {
    detail::require(y > 0.0 && std::isfinite(y), ErrorKind::ArgOutOfRange, "capacity must be positive");
    detail::require(log_R > 0.0, ErrorKind::ArgOutOfRange, "plate ratio R must exceed 1");
    const Moduli m = moduli_from_nome(Nome::from_capacity(y));
    return EllipticContext{y, m, 2.0 * m.K, 2.0 * m.Kprime, m.K * log_R / pi, 0.5 * y * log_R,
                           1.0 / (pi * y), log_R};
  }
};

/// Jacobi functions at i*alpha in real form.
struct JacobiImagValues {
  double sn_over_i;  // sn(i alpha, k) / i
  double cn;         // cn(i alpha, k)
  double dn;         // dn(i alpha, k)
  double z_over_i;   // Z(i alpha, k) / i
  double nu;         // -k^2 sn^2(i alpha, k)
};

/// sn, cn, dn from sn(ia,k) = i sn(a,k')/cn(a,k'), cn(ia,k) = 1/cn(a,k'),
/// dn(ia,k) = dn(a,k')/cn(a,k'); Z from the transformed-nome expression
///   Z(ia,k) = (i ln q1 / 2K) (a/K + theta_2'(eta,q1)/theta_2(eta,q1)),
/// eta = pi a / (2K').
inline JacobiImagValues jacobi_imag(double alpha, const Moduli& m) {
  detail::require(alpha >= 0.0, ErrorKind::ArgOutOfRange, "alpha must be non-negative");
  detail::require(alpha < m.Kprime - 1e-12, ErrorKind::ImagArgTooLarge,
                  "alpha=" + std::to_string(alpha) + " reaches the pole at K'=" + std::to_string(m.Kprime));
  const detail::SnCnDn c = detail::sncndn(alpha, m.k * m.k);
  JacobiImagValues v{};
  v.sn_over_i = c.sn / c.cn;
  v.cn = 1.0 / c.cn;
  v.dn = c.dn / c.cn;
  v.nu = m.k * m.k * v.sn_over_i * v.sn_over_i;
  const double eta = pi * alpha / (2.0 * m.Kprime);
  const double dlog2 = theta_dlog(2, eta, m.nome.transformed()).real();
  v.z_over_i = -(pi / (2.0 * m.Kprime)) * (alpha / m.K + dlog2);
  return v;
}

inline JacobiImagValues jacobi_imag(double alpha, double k) { return jacobi_imag(alpha, moduli_from_modulus(k)); }

/// Pi(u, i alpha) / i = (cn dn / sn)(i alpha) * [F(x,k) - Pi(x, nu, k)],
/// x = sn(u, k), for u in [0, K].
inline double pi_special(double u, const EllipticContext& ctx) {
  detail::require(u >= 0.0 && u <= ctx.K() * (1.0 + 1e-15), ErrorKind::ArgOutOfRange,
                  "pi_special needs u in [0, K]");
  if (u == 0.0) return 0.0;
  const JacobiImagValues jac = jacobi_imag(ctx.alpha, ctx.moduli);
  const detail::SnCnDn s = detail::sncndn(u, ctx.kprime() * ctx.kprime());
  const double x = s.sn;
  return (jac.cn * jac.dn / jac.sn_over_i) * -detail::Pi_minus_F_from(x, s.cn * s.cn, s.dn * s.dn, jac.nu);
}

}  // namespace condcap
