#pragma once

// Log-gamma, beta, digamma and trigamma for positive real arguments, and the
// three Mellin-type integrals
//
//   I1(m, s) = int_0^inf t^m / (1+t)^s dt
//   I2(m, s) = int_0^inf log(t) t^m / (1+t)^s dt
//   I3(m, s) = int_0^inf log(t)^2 t^m / (1+t)^s dt
//
// in closed form. Every closed-form variance expression in this library is
// assembled from these three.

#include <cmath>
#include <string>

#include "lldpd/errors.hpp"

namespace lldpd {

// Strictly positive, finite real.
class PositiveReal {
 public:
  explicit PositiveReal(double v) : value_(v) {
    if (!(std::isfinite(v) && v > 0.0)) {
      throw DomainError("expected a finite positive value, got " + std::to_string(v));
    }
  }
  double value() const noexcept { return value_; }
  operator double() const noexcept { return value_; }

 private:
  double value_;
};

namespace detail {

inline void require_positive(double x, const char* fn) {
  if (!(std::isfinite(x) && x > 0.0)) {
    throw DomainError(std::string(fn) + ": argument must be finite and > 0, got " +
                      std::to_string(x));
  }
}

// Below this the recurrences shift the argument upward before the asymptotic
// series is applied.
inline constexpr double kAsymptoticThreshold = 10.0;

}  // namespace detail

inline double log_gamma(double x) {
  detail::require_positive(x, "log_gamma");
  double shift = 0.0;
  if (x < detail::kAsymptoticThreshold) {
    double prod = 1.0;
    while (x < detail::kAsymptoticThreshold) {
      prod *= x;
      x += 1.0;
    }
    shift = std::log(prod);
  }
  // Stirling series, Bernoulli coefficients B_2k / (2k (2k-1)).
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = -3617.0 / 122400.0;
  series = series * inv2 + 1.0 / 156.0;
  series = series * inv2 - 691.0 / 360360.0;
  series = series * inv2 + 1.0 / 1188.0;
  series = series * inv2 - 1.0 / 1680.0;
  series = series * inv2 + 1.0 / 1260.0;
  series = series * inv2 - 1.0 / 360.0;
  series = series * inv2 + 1.0 / 12.0;
  series *= inv;
  constexpr double half_log_two_pi = 0.91893853320467274178;
  return (x - 0.5) * std::log(x) - x + half_log_two_pi + series - shift;
}

inline double log_beta(double a, double b) {
  detail::require_positive(a, "beta_fn");
  detail::require_positive(b, "beta_fn");
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

// B(a, b), computed in log space and exponentiated last.
inline double beta_fn(double a, double b) { return std::exp(log_beta(a, b)); }

inline double digamma(double x) {
  detail::require_positive(x, "digamma");
  double acc = 0.0;
  while (x < detail::kAsymptoticThreshold) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  double series = 1.0 / 12.0;
  series = series * inv2 - 691.0 / 32760.0;
  series = series * inv2 + 1.0 / 132.0;
  series = series * inv2 - 1.0 / 240.0;
  series = series * inv2 + 1.0 / 252.0;
  series = series * inv2 - 1.0 / 120.0;
  series = series * inv2 + 1.0 / 12.0;
  series *= inv2;
  return acc + std::log(x) - 0.5 / x - series;
}

inline double trigamma(double x) {
  detail::require_positive(x, "trigamma");
  double acc = 0.0;
  while (x < detail::kAsymptoticThreshold) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 7.0 / 6.0;
  series = series * inv2 - 691.0 / 2730.0;
  series = series * inv2 + 5.0 / 66.0;
  series = series * inv2 - 1.0 / 30.0;
  series = series * inv2 + 1.0 / 42.0;
  series = series * inv2 - 1.0 / 30.0;
  series = series * inv2 + 1.0 / 6.0;
  series *= inv2 * inv;
  return acc + inv + 0.5 * inv2 + series;
}

namespace detail {

struct MellinArgs {
  double left;   // m + 1
  double right;  // s - m - 1
};

inline MellinArgs mellin_args(double m, double s, const char* fn) {
  const MellinArgs args{m + 1.0, s - m - 1.0};
  if (!(args.left > 0.0) || !(args.right > 0.0) || !std::isfinite(args.left) ||
      !std::isfinite(args.right)) {
    throw DomainError(std::string(fn) + ": need m + 1 > 0 and s - m - 1 > 0 (m=" +
                      std::to_string(m) + ", s=" + std::to_string(s) + ")");
  }
  return args;
}

}  // namespace detail

inline double identity_I1(double m, double s) {
  const auto [left, right] = detail::mellin_args(m, s, "identity_I1");
  return beta_fn(right, left);
}

inline double identity_I2(double m, double s) {
  const auto [left, right] = detail::mellin_args(m, s, "identity_I2");
  return beta_fn(right, left) * (digamma(left) - digamma(right));
}

inline double identity_I3(double m, double s) {
  const auto [left, right] = detail::mellin_args(m, s, "identity_I3");
  const double d = digamma(left) - digamma(right);
  return beta_fn(right, left) * (d * d + trigamma(left) + trigamma(right));
}

}  // namespace lldpd
