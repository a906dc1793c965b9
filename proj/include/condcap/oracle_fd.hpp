#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "condcap/errors.hpp"
#include "condcap/exact_capacity.hpp"
#include "condcap/nome.hpp"

// Finite-volume minimization of the Dirichlet energy on the quarter
// {1 <= r <= r_out, 0 <= theta <= pi} of the normalized condenser: omega = 1/2
// on the unit circle (inversion symmetry), omega = 1 on the plate r = R,
// theta <= gamma, natural (Neumann) conditions elsewhere.  The grid is
// uniform in s = ln r on [0, ln R] and on [ln R, ln r_out], so the
// 5-point stencil has weights
//   radial edge:  dtheta_j / (s_{i+1} - s_i)
//   angular edge: (s_{i+1} - s_{i-1}) / (2 dtheta)
// and the capacity of the whole plane is four times the quarter energy.

namespace condcap {

struct FdProblem {
  double gamma;
  double R;
  double r_out = 0.0;  // 0 selects 50 R
  int n_r = 256;
  int n_theta = 256;
  double tol = 1e-10;
  int max_iter = 0;  // 0 selects 40 (n_r + n_theta) + 2000

  double outer_radius() const { return r_out > 0.0 ? r_out : 50.0 * R; }
};

struct FdGrid {
  std::vector<double> s;  // n_r + 1 radial nodes in ln r
  double dtheta;
  int n_r, n_theta, i_plate;
};

struct FdSolution {
  double energy;        // Dirichlet energy of the upper half plane outside |z| = 1
  double cap_estimate;  // 2 * energy
  double grid_residual; // relative residual of the linear solve
  int iterations;
  FdGrid grid;
  std::vector<double> omega;  // (n_r + 1) x (n_theta + 1), row-major in r
};

namespace detail {

inline void check_fd(const FdProblem& p, int min_n) {
  require(p.gamma > 0.0 && p.gamma <= pi, ErrorKind::GeometryInvalid, "gamma must lie in (0, pi]");
  require(p.R > 1.0 && std::isfinite(p.R), ErrorKind::GeometryInvalid, "R must exceed 1");
  require(p.outer_radius() > 4.0 * p.R, ErrorKind::GeometryInvalid, "r_out must exceed 4 R");
  require(p.n_r >= min_n && p.n_theta >= min_n, ErrorKind::GeometryInvalid,
          "grid needs at least " + std::to_string(min_n) + " cells per direction");
  require(p.tol > 0.0, ErrorKind::GeometryInvalid, "tolerance must be positive");
}

inline FdGrid make_grid(const FdProblem& p) {
  FdGrid g;
  g.n_r = p.n_r;
  g.n_theta = p.n_theta;
  g.dtheta = pi / p.n_theta;
  const double sR = std::log(p.R), sO = std::log(p.outer_radius());
  int m = static_cast<int>(std::lround(p.n_r * sR / sO));
  m = std::clamp(m, 4, p.n_r - 4);
  g.i_plate = m;
  g.s.resize(p.n_r + 1);
  for (int i = 0; i <= m; ++i) g.s[i] = sR * i / m;
  for (int i = m + 1; i <= p.n_r; ++i) g.s[i] = sR + (sO - sR) * (i - m) / (p.n_r - m);
  g.s[p.n_r] = sO;
  return g;
}

struct FdSystem {
  int nr, nt;
  std::vector<double> wr;  // radial edge (i,j)-(i+1,j), index i*(nt+1)+j
  std::vector<double> wt;  // angular edge (i,j)-(i,j+1), index i*nt+j
  std::vector<char> fixed;
  std::vector<double> value;

  int id(int i, int j) const { return i * (nt + 1) + j; }
};

inline FdSystem make_system(const FdProblem& p, const FdGrid& g) {
  FdSystem sys;
  sys.nr = g.n_r;
  sys.nt = g.n_theta;
  const int N = (sys.nr + 1) * (sys.nt + 1);
  sys.wr.assign(N, 0.0);
  sys.wt.assign((sys.nr + 1) * sys.nt, 0.0);
  sys.fixed.assign(N, 0);
  sys.value.assign(N, 0.0);
  for (int i = 0; i < sys.nr; ++i) {
    const double ds = g.s[i + 1] - g.s[i];
    for (int j = 0; j <= sys.nt; ++j) {
      const double dt = (j == 0 || j == sys.nt) ? 0.5 * g.dtheta : g.dtheta;
      sys.wr[sys.id(i, j)] = dt / ds;
    }
  }
  for (int i = 0; i <= sys.nr; ++i) {
    const double lo = i > 0 ? g.s[i] - g.s[i - 1] : 0.0;
    const double hi = i < sys.nr ? g.s[i + 1] - g.s[i] : 0.0;
    const double w = 0.5 * (lo + hi) / g.dtheta;
    for (int j = 0; j < sys.nt; ++j) sys.wt[i * sys.nt + j] = w;
  }
  for (int j = 0; j <= sys.nt; ++j) {
    sys.fixed[sys.id(0, j)] = 1;
    sys.value[sys.id(0, j)] = 0.5;
    if (j * g.dtheta <= p.gamma + 1e-12) {
      sys.fixed[sys.id(g.i_plate, j)] = 1;
      sys.value[sys.id(g.i_plate, j)] = 1.0;
    }
  }
  return sys;
}

// y = A x over all nodes, treating fixed nodes as identity rows.
inline void apply(const FdSystem& S, const std::vector<double>& x, std::vector<double>& y, bool free_only) {
  const int nt = S.nt;
  std::fill(y.begin(), y.end(), 0.0);
  for (int i = 0; i <= S.nr; ++i) {
    for (int j = 0; j <= nt; ++j) {
      const int k = S.id(i, j);
      double acc = 0.0;
      if (i < S.nr) acc += S.wr[k] * (x[k] - x[S.id(i + 1, j)]);
      if (i > 0) acc += S.wr[S.id(i - 1, j)] * (x[k] - x[S.id(i - 1, j)]);
      if (j < nt) acc += S.wt[i * nt + j] * (x[k] - x[k + 1]);
      if (j > 0) acc += S.wt[i * nt + j - 1] * (x[k] - x[k - 1]);
      y[k] = (free_only && S.fixed[k]) ? 0.0 : acc;
    }
  }
}

inline double energy(const FdSystem& S, const std::vector<double>& x) {
  double e = 0.0;
  for (int i = 0; i <= S.nr; ++i) {
    for (int j = 0; j <= S.nt; ++j) {
      const int k = S.id(i, j);
      if (i < S.nr) {
        const double d = x[k] - x[S.id(i + 1, j)];
        e += S.wr[k] * d * d;
      }
      if (j < S.nt) {
        const double d = x[k] - x[k + 1];
        e += S.wt[i * S.nt + j] * d * d;
      }
    }
  }
  return e;
}

inline FdSolution fd_solve_checked(const FdProblem& p) {
  const FdGrid g = make_grid(p);
  const FdSystem S = make_system(p, g);
  const int N = (S.nr + 1) * (S.nt + 1);

  // Warm start: the annulus profile 1/2 + s/(2 ln R), capped at 1.
  std::vector<double> x(N);
  for (int i = 0; i <= S.nr; ++i)
    for (int j = 0; j <= S.nt; ++j) {
      const int k = S.id(i, j);
      x[k] = S.fixed[k] ? S.value[k] : 0.5 + 0.5 * std::min(1.0, g.s[i] / g.s[g.i_plate]);
    }

  std::vector<double> diag(N, 1.0);
  for (int i = 0; i <= S.nr; ++i)
    for (int j = 0; j <= S.nt; ++j) {
      const int k = S.id(i, j);
      if (S.fixed[k]) continue;
      double d = 0.0;
      if (i < S.nr) d += S.wr[k];
      if (i > 0) d += S.wr[S.id(i - 1, j)];
      if (j < S.nt) d += S.wt[i * S.nt + j];
      if (j > 0) d += S.wt[i * S.nt + j - 1];
      diag[k] = d;
    }

  // Residual of the free rows; fixed entries of x never change.
  std::vector<double> r(N), z(N), pdir(N), Ap(N);
  apply(S, x, r, true);
  for (double& v : r) v = -v;
  std::vector<double> b_probe(N);
  {
    std::vector<double> x0(N, 0.0);
    for (int k = 0; k < N; ++k)
      if (S.fixed[k]) x0[k] = S.value[k];
    apply(S, x0, b_probe, true);
  }
  double bnorm = 0.0;
  for (double v : b_probe) bnorm += v * v;
  bnorm = std::sqrt(bnorm);
  if (bnorm == 0.0) bnorm = 1.0;

  for (int k = 0; k < N; ++k) z[k] = S.fixed[k] ? 0.0 : r[k] / diag[k];
  pdir = z;
  double rz = 0.0;
  for (int k = 0; k < N; ++k) rz += r[k] * z[k];

  const int budget = p.max_iter > 0 ? p.max_iter : 40 * (p.n_r + p.n_theta) + 2000;
  int it = 0;
  double rel = 0.0;
  for (;; ++it) {
    double rn = 0.0;
    for (double v : r) rn += v * v;
    rel = std::sqrt(rn) / bnorm;
    if (rel < p.tol) break;
    require(it < budget, ErrorKind::SolveDiverged,
            "CG stopped at relative residual " + std::to_string(rel) + " after " + std::to_string(it) + " iterations");
    apply(S, pdir, Ap, true);
    double pAp = 0.0;
    for (int k = 0; k < N; ++k) pAp += pdir[k] * Ap[k];
    const double a = rz / pAp;
    for (int k = 0; k < N; ++k) {
      x[k] += a * pdir[k];
      r[k] -= a * Ap[k];
    }
    double rz_new = 0.0;
    for (int k = 0; k < N; ++k) {
      z[k] = S.fixed[k] ? 0.0 : r[k] / diag[k];
      rz_new += r[k] * z[k];
    }
    const double beta = rz_new / rz;
    rz = rz_new;
    for (int k = 0; k < N; ++k) pdir[k] = z[k] + beta * pdir[k];
  }

  FdSolution sol;
  sol.energy = 2.0 * energy(S, x);
  sol.cap_estimate = 2.0 * sol.energy;
  sol.grid_residual = rel;
  sol.iterations = it;
  sol.grid = g;
  sol.omega = std::move(x);
  return sol;
}

}  // namespace detail

inline FdSolution fd_solve(const FdProblem& p) {
  detail::check_fd(p, 64);
  return detail::fd_solve_checked(p);
}

/// Capacity estimate; residual is |cap(n_r, n_theta) - cap(n_r/2, n_theta/2)|.
inline CapacityResult fd_capacity(const FdProblem& p) {
  detail::check_fd(p, 64);
  const FdSolution fine = detail::fd_solve_checked(p);
  FdProblem coarse = p;
  coarse.n_r = p.n_r / 2;
  coarse.n_theta = p.n_theta / 2;
  const FdSolution c = detail::fd_solve_checked(coarse);
  return {fine.cap_estimate, Method::oracle, std::abs(fine.cap_estimate - c.cap_estimate),
          fine.iterations + c.iterations};
}

/// Potential as CSV rows r,theta,omega.
inline void write_field_csv(std::ostream& os, const FdSolution& sol) {
  char buf[96];
  os << "r,theta,omega\n";
  const FdGrid& g = sol.grid;
  for (int i = 0; i <= g.n_r; ++i)
    for (int j = 0; j <= g.n_theta; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", std::exp(g.s[i]), j * g.dtheta,
                    sol.omega[i * (g.n_theta + 1) + j]);
      os << buf;
    }
}

}  // namespace condcap
