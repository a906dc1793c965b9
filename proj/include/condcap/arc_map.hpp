#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "condcap/elliptic.hpp"
#include "condcap/errors.hpp"
#include "condcap/nome.hpp"
#include "condcap/roots.hpp"
#include "condcap/theta.hpp"

// z(u) = R theta_4(pi u/omega1 - i ln R/2) / theta_4(pi u/omega1 + i ln R/2)
// maps the rectangle [0, omega1] x [0, omega2] onto the plane slit along two
// concentric arcs |z| = R (bottom side) and |z| = 1/R (top side).

namespace condcap {

struct RectangleMapParams {
  double omega1;
  double omega2;
  double R;

  double log_R() const { return std::log1p(R - 1.0); }
  Nome nome() const { return Nome::from_log(-pi * omega2 / omega1); }
  double alpha_pre() const { return 0.5 * omega2 - omega1 * log_R() / (2.0 * pi); }
  double beta_pre() const { return 0.5 * omega2 + omega1 * log_R() / (2.0 * pi); }

  /// Rectangle 2K x 2K' of a condenser with capacity y.
  static RectangleMapParams from_capacity(double y, double R) {
    const Moduli m = moduli_from_nome(Nome::from_capacity(y));
    return {2.0 * m.K, 2.0 * m.Kprime, R};
  }
};

namespace detail {

inline void check_map_params(const RectangleMapParams& p) {
  require(p.omega1 > 0.0 && p.omega2 > 0.0, ErrorKind::ArgOutOfRange, "rectangle sides must be positive");
  require(p.R > 1.0, ErrorKind::ArgOutOfRange, "R must exceed 1");
  require(p.log_R() < pi * p.omega2 / p.omega1, ErrorKind::OutsideLemmaRange,
          "ln R must stay below pi omega2 / omega1");
}

inline complex map_z_impl(complex u, const RectangleMapParams& p, const Nome& nome) {
  const double hl = 0.5 * p.log_R();
  for (double re : {0.0, p.omega1}) {
    if (std::abs(u - complex(re, p.alpha_pre())) < 1e-12)
      fail(ErrorKind::PoleAtAlpha, "z has a pole at the preimage of infinity");
  }
  const complex w = pi * u / p.omega1;
  const ThetaEval num = theta_eval(4, w - complex(0.0, hl), nome);
  const ThetaEval den = theta_eval(4, w + complex(0.0, hl), nome);
  const complex z = p.R * (num.value.mantissa / den.value.mantissa) *
                    std::exp(num.value.log_scale - den.value.log_scale);
  require(std::isfinite(z.real()) && std::isfinite(z.imag()), ErrorKind::NonFinite, "z(u) is not finite");
  return z;
}

}  // namespace detail

inline complex map_z(complex u, const RectangleMapParams& p) {
  detail::check_map_params(p);
  return detail::map_z_impl(u, p, p.nome());
}

/// As above with the nome supplied by the caller; it must equal exp(-pi omega2/omega1).
inline complex map_z(complex u, const RectangleMapParams& p, double q) {
  detail::check_map_params(p);
  const Nome n = p.nome();
  detail::require(std::abs(q - n.q()) <= 1e-12 * std::max(1.0, n.q()), ErrorKind::ArgOutOfRange,
                  "q does not match the rectangle");
  return detail::map_z_impl(u, p, n);
}

enum class TraceSide { bottom, top, mid };

inline const char* to_string(TraceSide s) {
  switch (s) {
    case TraceSide::bottom: return "bottom";
    case TraceSide::top: return "top";
    case TraceSide::mid: return "mid";
  }
  return "?";
}

struct TraceSample {
  complex u;
  complex z;
  TraceSide side;
};

struct BoundaryTrace {
  std::vector<complex> outer_arc;  // images of the bottom side, |z| = R
  std::vector<complex> inner_arc;  // images of the top side, |z| = 1/R
  std::vector<complex> mid_line;   // images of Im u = omega2/2, |z| = 1
  std::vector<TraceSample> samples;
  double gamma_est;
  double t_extremum;  // bottom-side abscissa where |Arg z| peaks
  double alpha_pre;
  double beta_pre;
};

/// |Arg z(t)| on the bottom side, failing if the branch cut is reached.
inline double arg_on_bottom(double t, const RectangleMapParams& p, const Nome& nome) {
  const double a = std::arg(detail::map_z_impl(complex(t, 0.0), p, nome));
  detail::require(std::abs(a) < pi - 1e-9, ErrorKind::ArgBranch, "Arg z reached the negative real axis");
  return std::abs(a);
}

inline BoundaryTrace trace_boundary(const RectangleMapParams& p, int n) {
  detail::check_map_params(p);
  detail::require(n >= 8, ErrorKind::ArgOutOfRange, "trace needs at least 8 samples per side");
  const Nome nome = p.nome();
  BoundaryTrace tr;
  tr.alpha_pre = p.alpha_pre();
  tr.beta_pre = p.beta_pre();
  tr.samples.reserve(3 * static_cast<std::size_t>(n));

  int best = 0;
  double best_arg = -1.0;
  for (int j = 0; j < n; ++j) {
    const double t = p.omega1 * j / (n - 1);
    const complex zb = detail::map_z_impl(complex(t, 0.0), p, nome);
    const complex zt = detail::map_z_impl(complex(t, p.omega2), p, nome);
    const complex zm = detail::map_z_impl(complex(t, 0.5 * p.omega2), p, nome);
    tr.outer_arc.push_back(zb);
    tr.inner_arc.push_back(zt);
    tr.mid_line.push_back(zm);
    tr.samples.push_back({complex(t, 0.0), zb, TraceSide::bottom});
    tr.samples.push_back({complex(t, p.omega2), zt, TraceSide::top});
    tr.samples.push_back({complex(t, 0.5 * p.omega2), zm, TraceSide::mid});
    const double a = std::abs(std::arg(zb));
    detail::require(a < pi - 1e-9, ErrorKind::ArgBranch, "Arg z reached the negative real axis");
    if (a > best_arg) {
      best_arg = a;
      best = j;
    }
  }
  // |Arg z| is symmetric about omega1/2 with one maximum on each half.
  const double step = p.omega1 / (n - 1);
  double t0 = best * step;
  if (t0 > 0.5 * p.omega1) t0 = p.omega1 - t0;
  const double lo = std::max(0.0, t0 - step);
  const double hi = std::min(0.5 * p.omega1, t0 + step);
  const auto [t, g] = golden_max([&](double s) { return arg_on_bottom(s, p, nome); }, lo, hi, 1e-12);
  tr.t_extremum = t;
  tr.gamma_est = std::max(g, best_arg);
  return tr;
}

}  // namespace condcap
