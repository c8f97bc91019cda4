#pragma once

// Density power divergence objective for the log-logistic family.
//
// For tau > 0 the maximized objective is
//
//   H(alpha, beta) = (1 + 1/tau) mean_i f(X_i)^tau - int f^(1+tau) dx - 1/tau,
//
// evaluated as mean_i expm1(tau log f_i)/tau + mean_i f_i^tau - int f^(1+tau),
// which tends to the mean log-likelihood as tau -> 0. At tau = 0 the mean
// log-density is used directly.

#include <array>
#include <cmath>
#include <string>

#include "lldpd/errors.hpp"
#include "lldpd/loglogistic.hpp"
#include "lldpd/specfun.hpp"

namespace lldpd {

class Tau {
 public:
  explicit Tau(double v) : value_(v) {
    if (!(std::isfinite(v) && v >= 0.0)) {
      throw DomainError("Tau: tuning parameter must be finite and >= 0, got " + std::to_string(v));
    }
  }
  double value() const noexcept { return value_; }
  bool is_likelihood() const noexcept { return value_ == 0.0; }

 private:
  double value_;
};

// Per-observation score (d/d alpha, d/d beta) of log f.
struct Score {
  double alpha;
  double beta;
};

inline Score score(const Params& p, double x) {
  detail::require_support(x, "score");
  const double u = std::log(x / p.alpha());
  // (t - 1)/(t + 1) with t = (x/alpha)^beta.
  const double th = std::tanh(0.5 * p.beta() * u);
  return {p.beta() / p.alpha() * th, 1.0 / p.beta() - u * th};
}

// Beta-function arguments a = (b tau + tau + b)/b and c = (b tau - tau + b)/b
// that recur throughout the closed forms.
struct BetaArgs {
  double a;
  double b;
};

inline BetaArgs dpd_beta_args(const Params& p, double tau) {
  const double beta = p.beta();
  const BetaArgs args{(beta * tau + tau + beta) / beta, (beta * tau - tau + beta) / beta};
  if (!(args.b > 0.0)) {
    throw DomainError("dpd: need beta (tau + 1) > tau (beta=" + std::to_string(beta) +
                      ", tau=" + std::to_string(tau) + ")");
  }
  return args;
}

// int_0^inf f^(1+tau) dx = (beta/alpha)^tau B(a, b).
inline double integral_term(const Params& p, Tau tau) {
  const double t = tau.value();
  const auto [a, b] = dpd_beta_args(p, t);
  return std::exp(t * std::log(p.beta() / p.alpha()) + log_beta(a, b));
}

inline double objective(const Sample& s, const Params& p, Tau tau) {
  const double t = tau.value();
  const double n = static_cast<double>(s.size());
  if (tau.is_likelihood()) {
    double acc = 0.0;
    for (double x : s) acc += log_pdf(p, x);
    return acc / n;
  }
  const double integral = integral_term(p, tau);
  double excess = 0.0;  // sum expm1(t log f) / t
  double power = 0.0;   // sum f^t
  for (double x : s) {
    const double lf = t * log_pdf(p, x);
    excess += std::expm1(lf);
    power += std::exp(lf);
  }
  return excess / (t * n) + power / n - integral;
}

// Analytic gradient (dH/d alpha, dH/d beta). The same expression covers tau = 0,
// where the integral term is identically 1.
inline std::array<double, 2> gradient(const Sample& s, const Params& p, Tau tau) {
  const double t = tau.value();
  const double n = static_cast<double>(s.size());
  double ga = 0.0;
  double gb = 0.0;
  for (double x : s) {
    const Score sc = score(p, x);
    const double w = t == 0.0 ? 1.0 : std::exp(t * log_pdf(p, x));
    ga += w * sc.alpha;
    gb += w * sc.beta;
  }
  ga *= (1.0 + t) / n;
  gb *= (1.0 + t) / n;
  if (t > 0.0) {
    const auto [a, b] = dpd_beta_args(p, t);
    const double integral = integral_term(p, tau);
    ga += t / p.alpha() * integral;
    gb -= t / p.beta() * integral * (1.0 + (digamma(b) - digamma(a)) / p.beta());
  }
  return {ga, gb};
}

}  // namespace lldpd
