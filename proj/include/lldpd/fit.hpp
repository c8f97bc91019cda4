#pragma once

// Minimum density power divergence fits (tau = 0 gives the MLE). The search
// runs in (log alpha, log beta): a Nelder-Mead pass from each start, a
// simplex restart, then a Newton polish on the analytic gradient.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lldpd/competitors.hpp"
#include "lldpd/dpd.hpp"
#include "lldpd/errors.hpp"
#include "lldpd/loglogistic.hpp"
#include "lldpd/optimize.hpp"

namespace lldpd {

enum class StartStrategy {
  HodgesLehmann,
  SampleMedian,
  Quartile,  // (median, 2 log 3 / IQR of log-data)
};

using Start = std::variant<Params, StartStrategy>;

struct FitOptions {
  double tolerance = 1e-9;           // relative parameter change
  double gradient_tolerance = 1e-7;  // on ||grad H||, scaled by max(1, |H|)
  std::size_t max_iterations = 500;
  std::vector<Start> starts = {StartStrategy::HodgesLehmann, StartStrategy::SampleMedian,
                               StartStrategy::Quartile};
};

struct FitResult {
  Params params_hat;
  Tau tau;
  double objective_value;
  bool converged;
  std::size_t iterations;
  double gradient_norm;  // Euclidean norm of the free components of grad H, original coordinates
  std::string start_used;
};

namespace detail {

inline void validate_fit_input(const Sample& s, const FitOptions& opts) {
  if (s.size() < 2) throw DomainError("fit: at least 2 observations are required");
  const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  if (*lo == *hi) throw DegenerateSampleError("fit: all observations are identical");
  if (!(opts.tolerance > 0.0) || !(opts.gradient_tolerance > 0.0) || opts.max_iterations < 1) {
    throw DomainError("fit: tolerances must be > 0 and max_iterations >= 1");
  }
}

inline std::string start_label(const Start& st) {
  if (const auto* p = std::get_if<Params>(&st)) {
    return "user(" + std::to_string(p->alpha()) + "," + std::to_string(p->beta()) + ")";
  }
  switch (std::get<StartStrategy>(st)) {
    case StartStrategy::HodgesLehmann: return "HL";
    case StartStrategy::SampleMedian: return "SM";
    case StartStrategy::Quartile: return "quartile";
  }
  return "?";
}

inline std::optional<Params> resolve_start(const Sample& s, const Start& st) {
  if (const auto* p = std::get_if<Params>(&st)) return *p;
  try {
    switch (std::get<StartStrategy>(st)) {
      case StartStrategy::HodgesLehmann: return estimate_hl(s).params();
      case StartStrategy::SampleMedian: return estimate_sm(s).params();
      case StartStrategy::Quartile: {
        std::vector<double> z = log_values(s);
        std::sort(z.begin(), z.end());
        const auto at = [&](double q) {
          const double pos = q * static_cast<double>(z.size() - 1);
          const auto i = static_cast<std::size_t>(pos);
          const double frac = pos - static_cast<double>(i);
          return i + 1 < z.size() ? z[i] + frac * (z[i + 1] - z[i]) : z[i];
        };
        const double iqr = at(0.75) - at(0.25);
        if (!(iqr > 0.0)) return std::nullopt;
        return Params(std::exp(at(0.5)), 2.0 * std::log(3.0) / iqr);
      }
    }
  } catch (const DomainError&) {
  }
  return std::nullopt;
}

// Shared driver. Free coordinates are logs of the free parameters;
// make_params maps them to Params and free_gradient projects the full
// gradient onto them (in original coordinates).
template <std::size_t N, class MakeParams, class FreeGradient, class InitialPoint>
FitResult fit_free(const Sample& s, Tau tau, const FitOptions& opts, MakeParams make_params,
                   FreeGradient free_gradient, InitialPoint initial_point) {
  using optimize::Point;
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  auto value = [&](const Point<N>& phi) {
    try {
      return objective(s, make_params(phi), tau);
    } catch (const DomainError&) {
      return kNegInf;
    }
  };
  auto log_gradient = [&](const Point<N>& phi) {
    Point<N> g{};
    try {
      const Params p = make_params(phi);
      const Point<N> raw = free_gradient(p, gradient(s, p, tau));
      const Point<N> scale = initial_point(p);  // free parameter values themselves
      for (std::size_t k = 0; k < N; ++k) g[k] = raw[k] * std::exp(scale[k]);
    } catch (const DomainError&) {
      g.fill(std::numeric_limits<double>::quiet_NaN());
    }
    return g;
  };

  struct Candidate {
    Point<N> phi;
    double value;
    bool converged;
    std::size_t iterations;
    double gnorm;
    std::string label;
  };
  std::vector<Candidate> candidates;

  optimize::SimplexOptions simplex;
  simplex.max_iterations = opts.max_iterations;
  simplex.x_tolerance = std::min(1e-10, opts.tolerance);
  optimize::NewtonOptions newton;
  newton.step_tolerance = opts.tolerance;

  for (const Start& st : opts.starts) {
    const std::optional<Params> p0 = resolve_start(s, st);
    if (!p0) continue;
    const Point<N> phi0 = initial_point(*p0);
    if (!std::isfinite(value(phi0))) continue;

    auto first = optimize::nelder_mead<N>(value, phi0, simplex);
    auto second = optimize::nelder_mead<N>(value, first.x, simplex);
    auto polished = optimize::newton_polish<N>(value, log_gradient, second.x, newton);

    const Params p = make_params(polished.x);
    const Point<N> g = free_gradient(p, gradient(s, p, tau));
    double gnorm = 0.0;
    for (double gi : g) gnorm += gi * gi;
    gnorm = std::sqrt(gnorm);
    const bool ok = std::isfinite(polished.value) &&
                    gnorm <= opts.gradient_tolerance * std::max(1.0, std::abs(polished.value)) &&
                    (polished.converged || second.converged);
    candidates.push_back({polished.x, polished.value, ok,
                          first.iterations + second.iterations + polished.iterations, gnorm,
                          start_label(st)});
  }
  if (candidates.empty()) {
    throw DegenerateSampleError("fit: no usable starting point for this sample");
  }

  const Candidate* best = nullptr;
  for (const Candidate& c : candidates) {
    if (best == nullptr) {
      best = &c;
      continue;
    }
    if (c.converged != best->converged) {
      if (c.converged) best = &c;
      continue;
    }
    const double tie = 1e-12 * std::max(1.0, std::abs(best->value));
    if (c.value > best->value + tie) best = &c;
  }
  return FitResult{make_params(best->phi), tau,          best->value, best->converged,
                   best->iterations,       best->gnorm, best->label};
}

}  // namespace detail

inline FitResult fit_joint(const Sample& s, Tau tau, const FitOptions& opts = {}) {
  detail::validate_fit_input(s, opts);
  using P = optimize::Point<2>;
  return detail::fit_free<2>(
      s, tau, opts, [](const P& phi) { return Params(std::exp(phi[0]), std::exp(phi[1])); },
      [](const Params&, const std::array<double, 2>& g) { return P{g[0], g[1]}; },
      [](const Params& p) { return P{std::log(p.alpha()), std::log(p.beta())}; });
}

// Fits alpha with the shape held at beta_known.
inline FitResult fit_alpha_known(const Sample& s, double beta_known, Tau tau,
                                 const FitOptions& opts = {}) {
  if (!(std::isfinite(beta_known) && beta_known > 0.0)) {
    throw DomainError("fit_alpha_known: beta must be finite and > 0");
  }
  detail::validate_fit_input(s, opts);
  using P = optimize::Point<1>;
  return detail::fit_free<1>(
      s, tau, opts, [=](const P& phi) { return Params(std::exp(phi[0]), beta_known); },
      [](const Params&, const std::array<double, 2>& g) { return P{g[0]}; },
      [](const Params& p) { return P{std::log(p.alpha())}; });
}

// Fits beta with the scale held at alpha_known.
inline FitResult fit_beta_known(const Sample& s, double alpha_known, Tau tau,
                                const FitOptions& opts = {}) {
  if (!(std::isfinite(alpha_known) && alpha_known > 0.0)) {
    throw DomainError("fit_beta_known: alpha must be finite and > 0");
  }
  detail::validate_fit_input(s, opts);
  using P = optimize::Point<1>;
  return detail::fit_free<1>(
      s, tau, opts, [=](const P& phi) { return Params(alpha_known, std::exp(phi[0])); },
      [](const Params&, const std::array<double, 2>& g) { return P{g[1]}; },
      [](const Params& p) { return P{std::log(p.beta())}; });
}

}  // namespace lldpd
