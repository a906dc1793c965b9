#include <gtest/gtest.h>

#include <cmath>

#include "condcap/elliptic.hpp"
#include "condcap/verify/quadrature.hpp"

using namespace condcap;
namespace vq = condcap::verify;

TEST(QuadratureOracle, ClosedForms) {
  EXPECT_NEAR(vq::quad_K(0.0), pi / 2.0, 1e-15);
  EXPECT_NEAR(vq::quad_F(0.5, 0.0), std::asin(0.5), 1e-15);
  // K(1/sqrt 2) = Gamma(1/4)^2 / (4 sqrt(pi)).
  EXPECT_NEAR(vq::quad_K(std::sqrt(0.5)), std::pow(std::tgamma(0.25), 2) / (4.0 * std::sqrt(pi)), 1e-14);
}

TEST(CompleteK, Values) {
  EXPECT_DOUBLE_EQ(complete_K(0.0), pi / 2.0);
  EXPECT_NEAR(complete_K(0.8), vq::quad_K(0.8), 1e-13);
  EXPECT_NEAR(complete_K(0.999), vq::quad_K(0.999), 1e-12);
  for (double bad : {1.0, 1.5, -0.1}) {
    try {
      complete_K(bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ModulusOutOfRange);
    }
  }
}

TEST(CompleteE, Values) {
  EXPECT_DOUBLE_EQ(complete_E(0.0), pi / 2.0);
  EXPECT_DOUBLE_EQ(complete_E(1.0), 1.0);
  EXPECT_NEAR(complete_E(0.6), vq::quad_E_complete(0.6), 1e-14);
}

TEST(Legendre, Relation) {
  for (double k : {0.05, 0.3, 0.7, 0.95, 0.9999}) {
    const double kp = std::sqrt(1.0 - k * k);
    const double K = complete_K(k), Kp = complete_K(kp);
    EXPECT_NEAR(complete_E(k) * Kp + complete_E(kp) * K - K * Kp, pi / 2.0, 1e-12) << k;
  }
}

TEST(IncompleteF, Values) {
  EXPECT_DOUBLE_EQ(incomplete_F(0.5, 0.0), std::asin(0.5));
  EXPECT_NEAR(incomplete_F(1.0, 0.6), complete_K(0.6), 1e-13);
  EXPECT_NEAR(incomplete_F(0.9, 0.95), vq::quad_F(0.9, 0.95), 1e-12);
  EXPECT_NEAR(incomplete_F(0.999999, 0.999), vq::quad_F(0.999999, 0.999), 1e-11);
  EXPECT_EQ(incomplete_F(0.0, 0.3), 0.0);
  EXPECT_THROW(incomplete_F(1.2, 0.3), Error);
  EXPECT_THROW(incomplete_F(0.5, 1.0), Error);
}

TEST(IncompleteE, Values) {
  EXPECT_DOUBLE_EQ(incomplete_E(0.5, 0.0), std::asin(0.5));
  EXPECT_DOUBLE_EQ(incomplete_E(1.0, 0.0), pi / 2.0);
  EXPECT_NEAR(incomplete_E(0.7, 0.8), vq::quad_E(0.7, 0.8), 1e-12);
  EXPECT_NEAR(incomplete_E(0.99, 0.999), vq::quad_E(0.99, 0.999), 1e-12);
  EXPECT_NEAR(incomplete_E(1.0, 0.4), complete_E(0.4), 1e-14);
}

TEST(IncompletePi, Values) {
  EXPECT_NEAR(incomplete_Pi(0.6, 0.0, 0.4), incomplete_F(0.6, 0.4), 1e-15);
  EXPECT_EQ(incomplete_Pi(0.0, 3.0, 0.4), 0.0);
  EXPECT_NEAR(incomplete_Pi(0.8, 2.5, 0.9), vq::quad_Pi(0.8, 2.5, 0.9), 1e-12);
  EXPECT_NEAR(incomplete_Pi(0.5, -0.7, 0.3), vq::quad_Pi(0.5, -0.7, 0.3), 1e-12);
  try {
    incomplete_Pi(0.9, -2.0, 0.3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CharacteristicPole);
  }
}

TEST(Moduli, FromNome) {
  const Moduli small = moduli_from_nome(1e-12);
  EXPECT_LT(small.k, 1e-5);
  EXPECT_NEAR(small.K, pi / 2.0, 1e-11);
  for (double q : {0.05, 0.4, 0.7, 0.95}) {
    const Moduli m = moduli_from_nome(q);
    EXPECT_NEAR(m.k * m.k + m.kprime * m.kprime, 1.0, 1e-14) << q;
    EXPECT_NEAR(m.Kprime, m.K * std::log(1.0 / q) / pi, 1e-13 * m.Kprime);
  }
  const Moduli m = moduli_from_nome(0.01);
  EXPECT_NEAR(m.K, vq::quad_K(m.k), 1e-12);
  EXPECT_NEAR(m.Kprime, vq::quad_K(m.kprime), 1e-12);
  EXPECT_THROW(moduli_from_nome(0.0), Error);
}

TEST(Moduli, NomeAndModulusRoundTrip) {
  for (double k : {0.2, 0.7, 0.99}) {
    const Moduli a = moduli_from_modulus(k);
    const Moduli b = moduli_from_nome(a.nome);
    EXPECT_NEAR(b.k, k, 1e-14);
    EXPECT_NEAR(b.K / a.K, 1.0, 1e-14);
  }
}

TEST(Moduli, TinyComplementKeepsPrecision) {
  // k' ~ 4 exp(-pi y / 2) far below double epsilon.
  const Moduli m = moduli_from_nome(Nome::from_capacity(100.0));
  EXPECT_GT(m.kprime, 0.0);
  EXPECT_NEAR(m.kprime / (4.0 * std::exp(-pi * 100.0 / 2.0)), 1.0, 1e-12);
  EXPECT_NEAR(m.K / m.Kprime, 100.0, 1e-12);
}

TEST(EllipticContext, Invariants) {
  const double y = 3.0, lr = std::log(1.4);
  const EllipticContext c = EllipticContext::from_capacity(y, lr);
  EXPECT_NEAR(c.k() * c.k() + c.kprime() * c.kprime(), 1.0, 1e-14);
  EXPECT_NEAR(c.omega1 / (2.0 * c.K()), 1.0, 1e-13);
  EXPECT_NEAR(c.omega2 / (2.0 * c.Kprime()), 1.0, 1e-13);
  EXPECT_NEAR(c.K() / c.Kprime(), y, 1e-13);
  EXPECT_DOUBLE_EQ(c.eta, lr * y / 2.0);
  EXPECT_DOUBLE_EQ(c.x, 1.0 / (pi * y));
  EXPECT_NEAR(c.K(), vq::quad_K(c.k()), 1e-11);
  const double E = complete_E(c.k()), Ep = complete_E(c.kprime());
  EXPECT_NEAR(E * c.Kprime() + Ep * c.K() - c.K() * c.Kprime(), pi / 2.0, 1e-12);
}

TEST(Jacobi, RealArgumentInvertsF) {
  for (double k : {0.3, 0.9, 0.99999}) {
    const double u = 0.7 * complete_K(k);
    const auto s = jacobi_real(u, k);
    EXPECT_NEAR(vq::quad_F(s.sn, k), u, 1e-12);
    EXPECT_NEAR(s.sn * s.sn + s.cn * s.cn, 1.0, 1e-15);
    EXPECT_NEAR(s.dn * s.dn + k * k * s.sn * s.sn, 1.0, 1e-15);
  }
}

TEST(JacobiImag, SmallArgument) {
  const auto v = jacobi_imag(1e-10, 0.6);
  EXPECT_NEAR(v.sn_over_i, 1e-10, 1e-20);
  EXPECT_NEAR(v.cn, 1.0, 1e-15);
  EXPECT_NEAR(v.dn, 1.0, 1e-15);
  EXPECT_NEAR(v.z_over_i, 0.0, 1e-10);
}

TEST(JacobiImag, Identities) {
  const auto v = jacobi_imag(0.5, 0.9);
  EXPECT_NEAR(v.cn * v.cn - v.sn_over_i * v.sn_over_i, 1.0, 1e-12);
  EXPECT_NEAR(v.dn * v.dn - 0.81 * v.sn_over_i * v.sn_over_i, 1.0, 1e-12);
  EXPECT_NEAR(v.nu, 0.81 * v.sn_over_i * v.sn_over_i, 1e-15);
  EXPECT_GE(v.nu, 0.0);
}

TEST(JacobiImag, ThetaQuotientOracle) {
  const double k = 0.7, alpha = 0.4;
  const Moduli m = moduli_from_modulus(k);
  const Nome q1 = m.nome.transformed();
  const double eta = pi * alpha / (2.0 * m.Kprime);
  const double t1 = theta(1, eta, q1).real(), t2 = theta(2, eta, q1).real();
  const double t3 = theta(3, eta, q1).real(), t4 = theta(4, eta, q1).real();
  const auto v = jacobi_imag(alpha, k);
  EXPECT_NEAR(v.sn_over_i, t1 / t2 / std::sqrt(k), 1e-11);
  EXPECT_NEAR(v.cn, std::sqrt(m.kprime / k) * t4 / t2, 1e-11);
  EXPECT_NEAR(v.dn, std::sqrt(m.kprime) * t3 / t2, 1e-11);
  // Z(u) = (pi/2K) theta_4'/theta_4 at w = pi u / 2K in the original nome.
  const complex w(0.0, pi * alpha / (2.0 * m.K));
  const complex z = pi / (2.0 * m.K) * theta_dlog4(w, m.nome);
  EXPECT_NEAR(v.z_over_i, z.imag(), 1e-11);
  EXPECT_NEAR(z.real(), 0.0, 1e-15);
}

TEST(JacobiImag, PoleGuard) {
  const double k = 0.5;
  const double Kp = complete_K(std::sqrt(0.75));
  try {
    jacobi_imag(Kp, k);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ImagArgTooLarge);
  }
}

TEST(PiSpecial, ZeroAndQuadrature) {
  const EllipticContext ctx = EllipticContext::from_capacity(4.0, std::log(1.3));
  EXPECT_EQ(pi_special(0.0, ctx), 0.0);
  const auto j = jacobi_imag(ctx.alpha, ctx.moduli);
  const double k2 = ctx.k() * ctx.k();
  // Jacobi form: integral over t of k^2 s c d sn^2 t / (1 + nu sn^2 t).
  auto integrand = [&](double t) {
    const double sn = jacobi_real(t, ctx.k()).sn;
    return k2 * j.sn_over_i * j.cn * j.dn * sn * sn / (1.0 + j.nu * sn * sn);
  };
  for (double f : {0.25, 0.5, 1.0}) {
    const double u = f * ctx.K();
    EXPECT_NEAR(pi_special(u, ctx), vq::integrate(integrand, 0.0, u, 1e-14), 1e-10) << f;
  }
  EXPECT_THROW(pi_special(1.1 * ctx.K(), ctx), Error);
}
