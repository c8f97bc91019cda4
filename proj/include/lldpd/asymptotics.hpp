#pragma once

// Closed-form asymptotic covariance of the MDPDE:
//
//   sqrt(n) (theta_hat - theta) -> N(0, J^{-1} K J^{-1}),
//   J_tau = int s s^T f^(1+tau),  xi_tau = int s f^(1+tau),  K_tau = J_2tau - xi xi^T,
//
// where s is the (alpha, beta) score of log f. Substituting t = (x/alpha)^beta
// turns every entry into a combination of the integrals
//
//   int (log t)^k t^(m0 + p) / (1+t)^(s0 + q) dt,   m0 = (beta-1) tau / beta, s0 = 2 tau + 2,
//
// with k in {0, 1, 2}, evaluated by identity_I1..identity_I3.

#include <array>
#include <cmath>
#include <string>

#include "lldpd/dpd.hpp"
#include "lldpd/errors.hpp"
#include "lldpd/loglogistic.hpp"
#include "lldpd/specfun.hpp"

namespace lldpd {

using Matrix2 = std::array<std::array<double, 2>, 2>;

struct AsymptoticMatrices {
  Matrix2 j;
  Matrix2 k;
  std::array<double, 2> xi;
  Matrix2 sandwich;
  double condition_number;  // of j
};

namespace detail {

class MellinTerms {
 public:
  MellinTerms(const Params& p, double tau)
      : m0_((p.beta() - 1.0) * tau / p.beta()), s0_(2.0 * tau + 2.0) {
    dpd_beta_args(p, tau);  // domain guard
  }

  // int (log t)^power t^(m0 + dm) (1+t)^-(s0 + ds) dt
  double operator()(int power, double dm, double ds) const {
    const double m = m0_ + dm;
    const double s = s0_ + ds;
    switch (power) {
      case 0: return identity_I1(m, s);
      case 1: return identity_I2(m, s);
      default: return identity_I3(m, s);
    }
  }

 private:
  double m0_;
  double s0_;
};

inline double ratio_power(const Params& p, double tau) {
  return std::pow(p.beta() / p.alpha(), tau);
}

}  // namespace detail

inline double j_alpha(const Params& p, Tau tau) {
  const double t = tau.value();
  const double beta = p.beta();
  const auto [a, b] = dpd_beta_args(p, t);
  const double bracket =
      2.0 * (beta * t + t + beta) * (-t * beta - beta + t) / (beta * beta * (t + 1.0) * (2.0 * t + 3.0)) +
      1.0;
  return std::pow(beta / p.alpha(), t + 2.0) * beta_fn(a, b) * bracket;
}

inline double xi_alpha(const Params& p, Tau tau) {
  const double t = tau.value();
  const double beta = p.beta();
  const auto [a, b] = dpd_beta_args(p, t);
  return std::pow(beta / p.alpha(), t + 1.0) * beta_fn(a, b) * (-t / (beta + t * beta));
}

inline double k_alpha(const Params& p, Tau tau) {
  const double xi = xi_alpha(p, tau);
  return j_alpha(p, Tau(2.0 * tau.value())) - xi * xi;
}

inline double j_beta(const Params& p, Tau tau) {
  const double t = tau.value();
  const detail::MellinTerms w(p, t);
  // (1 + L r)^2 with L = log t, r = (1 - t)/(1 + t) = 1 - 2t/(1+t).
  const double sum = w(0, 0, 0) + 2.0 * w(1, 0, 0) - 4.0 * w(1, 1, 1) + w(2, 0, 0) -
                     4.0 * w(2, 1, 1) + 4.0 * w(2, 2, 2);
  return detail::ratio_power(p, t) / (p.beta() * p.beta()) * sum;
}

inline double xi_beta(const Params& p, Tau tau) {
  const double t = tau.value();
  const double beta = p.beta();
  const auto [a, b] = dpd_beta_args(p, t);
  return std::pow(beta, t - 1.0) / std::pow(p.alpha(), t) * (t / (t + 1.0)) * beta_fn(a, b) *
         (1.0 + (digamma(b) - digamma(a)) / beta);
}

inline double k_beta(const Params& p, Tau tau) {
  const double xi = xi_beta(p, tau);
  return j_beta(p, Tau(2.0 * tau.value())) - xi * xi;
}

inline double j_cross(const Params& p, Tau tau) {
  const double t = tau.value();
  const detail::MellinTerms w(p, t);
  // (1 - 2/(1+t)) (1 + L (1 - 2t/(1+t))) expanded term by term.
  const double sum = w(0, 0, 0) + w(1, 0, 0) - 2.0 * w(1, 1, 1) - 2.0 * w(0, 0, 1) -
                     2.0 * w(1, 0, 1) + 4.0 * w(1, 1, 2);
  return detail::ratio_power(p, t) / p.alpha() * sum;
}

inline Matrix2 inverse(const Matrix2& m) {
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const double scale = std::abs(m[0][0] * m[1][1]) + std::abs(m[0][1] * m[1][0]);
  if (!(std::abs(det) > 1e-300 * scale) || !std::isfinite(det)) {
    throw ConditioningError("2x2 matrix is singular (det=" + std::to_string(det) + ")");
  }
  return Matrix2{{{m[1][1] / det, -m[0][1] / det}, {-m[1][0] / det, m[0][0] / det}}};
}

inline Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  Matrix2 out{};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
  return out;
}

inline Matrix2 j_matrix(const Params& p, Tau tau) {
  const double cross = j_cross(p, tau);
  return Matrix2{{{j_alpha(p, tau), cross}, {cross, j_beta(p, tau)}}};
}

inline AsymptoticMatrices sandwich(const Params& p, Tau tau) {
  AsymptoticMatrices out{};
  out.j = j_matrix(p, tau);
  const double a = out.j[0][0], b = out.j[0][1], c = out.j[1][1];
  const double det = a * c - b * b;
  if (!(a > 0.0) || !(det > 0.0)) {
    throw ConditioningError("J is not positive definite at alpha=" + std::to_string(p.alpha()) +
                            ", beta=" + std::to_string(p.beta()) +
                            ", tau=" + std::to_string(tau.value()));
  }
  const double mean = 0.5 * (a + c);
  const double radius = std::hypot(0.5 * (a - c), b);
  out.condition_number = (mean + radius) / (mean - radius);

  const Matrix2 j2 = j_matrix(p, Tau(2.0 * tau.value()));
  out.xi = {xi_alpha(p, tau), xi_beta(p, tau)};
  for (int r = 0; r < 2; ++r)
    for (int col = 0; col < 2; ++col) out.k[r][col] = j2[r][col] - out.xi[r] * out.xi[col];
  out.k[1][0] = out.k[0][1];

  const Matrix2 jinv = inverse(out.j);
  out.sandwich = multiply(multiply(jinv, out.k), jinv);
  const double off = 0.5 * (out.sandwich[0][1] + out.sandwich[1][0]);
  out.sandwich[0][1] = out.sandwich[1][0] = off;
  return out;
}

}  // namespace lldpd
