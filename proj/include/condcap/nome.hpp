#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "condcap/errors.hpp"

namespace condcap {

inline constexpr double pi = std::numbers::pi;

/// Nome q = exp(i*pi*tau) of a rectangular period lattice, stored by its
/// logarithm so that nomes close to 1 (thin condensers) keep full precision.
/// The transformed nome q1 = exp(pi^2 / ln q) follows from ln q * ln q1 = pi^2.
class Nome {
 public:
  /// Upper limit on q accepted from callers that pass q itself.
  static constexpr double max_q = 1.0 - 1e-12;

  static Nome from_q(double q) {
    detail::require(q >= 0.0 && q <= max_q, ErrorKind::NomeOutOfRange,
                    "nome q=" + std::to_string(q) + " outside [0, 1-1e-12]");
    return Nome(q == 0.0 ? -INFINITY : std::log(q));
  }

  static Nome from_log(double log_q) {
    detail::require(log_q < 0.0 && !std::isnan(log_q), ErrorKind::NomeOutOfRange,
                    "log nome must be negative, got " + std::to_string(log_q));
    return Nome(log_q);
  }

  /// q = exp(-pi / y) for a condenser of capacity y.
  static Nome from_capacity(double y) {
    detail::require(y > 0.0 && std::isfinite(y), ErrorKind::ArgOutOfRange,
                    "capacity must be positive and finite");
    return Nome(-pi / y);
  }

  double q() const noexcept { return std::exp(log_q_); }
  double log_q() const noexcept { return log_q_; }
  double log_q1() const noexcept { return pi * pi / log_q_; }
  double q1() const noexcept { return std::exp(log_q1()); }
  /// omega2 / omega1 of the period rectangle.
  double tau() const noexcept { return -log_q_ / pi; }

  Nome transformed() const { return from_log(log_q1()); }

 private:
  explicit Nome(double log_q) : log_q_(log_q) {}
  double log_q_;
};

}  // namespace condcap
