#pragma once

// Influence functions of the single-parameter MDPDEs (the other parameter
// held at its true value). As M-estimators with estimating function
// psi(x) = f(x)^tau s(x) - xi_tau they have IF(x) = psi(x) / J_tau, which is
// bounded in x for every tau > 0 and reduces to the Fisher-scaled score at
// tau = 0.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "lldpd/asymptotics.hpp"
#include "lldpd/dpd.hpp"
#include "lldpd/errors.hpp"
#include "lldpd/loglogistic.hpp"

namespace lldpd {

enum class IFTarget { Alpha, Beta };
enum class GridScale { Linear, Log };

struct IFPoint {
  double x;
  double value;
};

namespace detail {

inline double density_weight(const Params& p, double tau, double x) {
  return tau == 0.0 ? 1.0 : std::exp(tau * log_pdf(p, x));
}

}  // namespace detail

inline double if_alpha(const Params& p, Tau tau, double x) {
  const double t = tau.value();
  const double psi = detail::density_weight(p, t, x) * score(p, x).alpha - xi_alpha(p, tau);
  return psi / j_alpha(p, tau);
}

inline double if_beta(const Params& p, Tau tau, double x) {
  const double t = tau.value();
  const double psi = detail::density_weight(p, t, x) * score(p, x).beta - xi_beta(p, tau);
  return psi / j_beta(p, tau);
}

inline double influence(IFTarget target, const Params& p, Tau tau, double x) {
  return target == IFTarget::Alpha ? if_alpha(p, tau, x) : if_beta(p, tau, x);
}

// Grid positions from x_min to x_max inclusive.
inline std::vector<double> grid_points(double x_min, double x_max, std::size_t n, GridScale scale) {
  if (!(std::isfinite(x_min) && std::isfinite(x_max) && x_min > 0.0 && x_min < x_max)) {
    throw DomainError("if_grid: need 0 < x_min < x_max");
  }
  if (n < 2) throw DomainError("if_grid: need at least 2 points");
  std::vector<double> xs(n);
  const double lo = scale == GridScale::Log ? std::log(x_min) : x_min;
  const double hi = scale == GridScale::Log ? std::log(x_max) : x_max;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    xs[i] = scale == GridScale::Log ? std::exp(v) : v;
  }
  xs.front() = x_min;
  xs.back() = x_max;
  return xs;
}

inline std::vector<IFPoint> if_grid(IFTarget target, const Params& p, Tau tau, double x_min,
                                    double x_max, std::size_t n, GridScale scale) {
  std::vector<IFPoint> out;
  out.reserve(n);
  for (double x : grid_points(x_min, x_max, n, scale)) out.push_back({x, influence(target, p, tau, x)});
  return out;
}

}  // namespace lldpd
