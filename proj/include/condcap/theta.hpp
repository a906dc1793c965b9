#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "condcap/errors.hpp"
#include "condcap/nome.hpp"

// Jacobi theta functions theta_1..theta_4 with the convention
//   theta_3(w; q) = 1 + 2 sum q^{n^2} cos(2 n w)
// and their logarithmic derivatives.  Values are produced as
// mantissa * exp(log_scale) so that ratios stay finite when the
// functions themselves under- or overflow (q -> 1, or large Im w).

namespace condcap {

using complex = std::complex<double>;

namespace detail {

inline constexpr double kThetaTruncation = 1e-17;
inline constexpr double kNomeSwitch = 0.5;

struct ScaledComplex {
  complex mantissa;
  complex log_scale;

  complex value() const { return mantissa * std::exp(log_scale); }
  double log_abs() const { return std::log(std::abs(mantissa)) + log_scale.real(); }
};

struct ThetaEval {
  ScaledComplex value;
  complex dlog;     // theta'(w) / theta(w)
  double log_ref;   // log of the largest series term, same units as mantissa
};

inline void check_index(int j) {
  require(j >= 1 && j <= 4, ErrorKind::ArgOutOfRange, "theta index must be 1..4");
}

// Series in the nome exp(log_q) for w already reduced.  For j = 1, 2 the
// common factor 2 q^{1/4} is moved into log_scale.  Each term is formed as
// exp(p log_q +- i m w) so large |Im w| never overflows an intermediate.
inline ThetaEval theta_series(int j, complex w, double log_q) {
  const complex I(0.0, 1.0);
  const bool half = (j == 1 || j == 2);
  const double log_tol = std::log(kThetaTruncation);

  complex sum = half ? complex(0.0) : complex(1.0);
  complex dsum(0.0);
  double max_exponent = 0.0;
  const int first = half ? 0 : 1;
  for (int n = first;; ++n) {
    const double power = half ? double(n) * (n + 1) : double(n) * n;  // q exponent
    const double m = half ? 2.0 * n + 1.0 : 2.0 * n;                  // frequency
    const double base = power > 0.0 ? power * log_q : 0.0;
    const double exponent = base + m * std::abs(w.imag());
    if (n > first + 1 && exponent < max_exponent + log_tol) break;
    if (n > 200) fail(ErrorKind::NonFinite, "theta series failed to converge");
    max_exponent = std::max(max_exponent, exponent);

    const complex ep = std::exp(base + I * m * w);
    const complex em = std::exp(base - I * m * w);
    const double sign = (j == 1 || j == 4) && (n % 2 == 1) ? -1.0 : 1.0;
    const complex c = 0.5 * (ep + em);        // q^p cos(m w)
    const complex s = (ep - em) / (2.0 * I);  // q^p sin(m w)
    switch (j) {
      case 1:
        sum += sign * s;
        dsum += sign * m * c;
        break;
      case 2:
        sum += c;
        dsum -= m * s;
        break;
      default:
        sum += 2.0 * sign * c;
        dsum -= 2.0 * sign * m * s;
        break;
    }
  }
  ThetaEval out;
  if (half) {
    out.value = {2.0 * sum, complex(log_q / 4.0, 0.0)};
  } else {
    out.value = {sum, complex(0.0)};
  }
  out.dlog = dsum / sum;
  out.log_ref = max_exponent + (half ? std::log(2.0) : 0.0);
  return out;
}

// Direct evaluation: reduce Re w by the period pi, Im w by the quasi-period
// pi*tau = i ln(1/q), then sum the series.
inline ThetaEval theta_direct(int j, complex w, double log_q) {
  const complex I(0.0, 1.0);
  complex extra_log(0.0);
  complex extra_dlog(0.0);

  const double m = std::round(w.real() / pi);
  if (m != 0.0) {
    w -= m * pi;
    if ((j == 1 || j == 2) && std::fmod(std::abs(m), 2.0) == 1.0) extra_log += I * pi;
  }

  const double L = -log_q;
  if (std::isfinite(L)) {
    const double n = std::round(w.imag() / L);
    if (n != 0.0) {
      w -= I * (n * L);
      // theta(w' + n pi tau) = c^n q^{-n^2} exp(-2 i n w') theta(w')
      if ((j == 1 || j == 4) && std::fmod(std::abs(n), 2.0) == 1.0) extra_log += I * pi;
      extra_log += -n * n * log_q - 2.0 * I * n * w;
      extra_dlog += -2.0 * I * n;
    }
  }
  ThetaEval out = theta_series(j, w, log_q);
  out.value.log_scale += extra_log;
  out.dlog += extra_dlog;
  return out;
}

// Jacobi imaginary transformation to the nome q1 = exp(pi^2 / ln q):
//   theta_1(w,q) = i A E theta_1(w1,q1),  theta_2(w,q) = A E theta_4(w1,q1),
//   theta_3(w,q) = A E theta_3(w1,q1),    theta_4(w,q) = A E theta_2(w1,q1),
// with A = sqrt(ln(1/q1)/pi), E = exp(w^2 ln q1 / pi^2), w1 = i w ln q1 / pi.
inline ThetaEval theta_transformed(int j, complex w, double log_q) {
  const complex I(0.0, 1.0);
  const double m = std::round(w.real() / pi);
  complex extra_log(0.0);
  if (m != 0.0) {
    w -= m * pi;
    if ((j == 1 || j == 2) && std::fmod(std::abs(m), 2.0) == 1.0) extra_log += I * pi;
  }
  const double log_q1 = pi * pi / log_q;
  const complex w1 = I * w * (log_q1 / pi);
  static constexpr int partner[5] = {0, 1, 4, 3, 2};
  ThetaEval inner = theta_direct(partner[j], w1, log_q1);

  extra_log += 0.5 * std::log(-log_q1 / pi) + w * w * (log_q1 / (pi * pi));
  if (j == 1) extra_log += I * (pi / 2.0);
  inner.value.log_scale += extra_log;
  inner.dlog = 2.0 * w * (log_q1 / (pi * pi)) + I * (log_q1 / pi) * inner.dlog;
  return inner;
}

inline ThetaEval theta_eval(int j, complex w, const Nome& nome) {
  check_index(j);
  require(std::isfinite(w.real()) && std::isfinite(w.imag()), ErrorKind::NonFinite,
          "theta argument is not finite");
  if (nome.log_q() > std::log(kNomeSwitch)) return theta_transformed(j, w, nome.log_q());
  return theta_direct(j, w, nome.log_q());
}

inline ScaledComplex theta_scaled(int j, complex w, const Nome& nome) {
  return theta_eval(j, w, nome).value;
}

}  // namespace detail

/// theta_j(w; q).  Throws NonFinite if the value overflows.
inline complex theta(int j, complex w, const Nome& nome) {
  const complex v = detail::theta_eval(j, w, nome).value.value();
  detail::require(std::isfinite(v.real()) && std::isfinite(v.imag()), ErrorKind::NonFinite,
                  "theta value overflows; reduce the argument by periodicity");
  return v;
}

inline complex theta(int j, complex w, double q) { return theta(j, w, Nome::from_q(q)); }

/// theta_j'(w) / theta_j(w) by the term-wise differentiated series.
/// A zero is reported when the series cancels below double precision
/// relative to its largest term (the value itself may be legitimately tiny
/// through the scale factor).
inline complex theta_dlog(int j, complex w, const Nome& nome) {
  const detail::ThetaEval e = detail::theta_eval(j, w, nome);
  const double rel = std::log(std::abs(e.value.mantissa)) - e.log_ref;
  detail::require(rel > std::log(1e-15) && std::isfinite(e.dlog.real()) && std::isfinite(e.dlog.imag()),
                  ErrorKind::PoleAtZero,
                  "theta_" + std::to_string(j) + " vanishes at the requested argument");
  return e.dlog;
}

inline complex theta_dlog4(complex w, double q) { return theta_dlog(4, w, Nome::from_q(q)); }
inline complex theta_dlog4(complex w, const Nome& nome) { return theta_dlog(4, w, nome); }

}  // namespace condcap
