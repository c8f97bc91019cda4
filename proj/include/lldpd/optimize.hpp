#pragma once

// Small fixed-dimension maximizers used by the fitting routines: a
// Nelder-Mead simplex search and a damped Newton polish driven by an analytic
// gradient with a central-difference Hessian.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>

namespace lldpd::optimize {

template <std::size_t N>
using Point = std::array<double, N>;

template <std::size_t N>
struct Outcome {
  Point<N> x{};
  double value = -std::numeric_limits<double>::infinity();
  std::size_t iterations = 0;
  bool converged = false;
};

struct SimplexOptions {
  double initial_step = 0.1;
  double x_tolerance = 1e-10;
  double f_tolerance = 1e-14;
  std::size_t max_iterations = 500;
};

// Maximizes f. f may return -inf (or NaN) outside its domain.
template <std::size_t N, class F>
Outcome<N> nelder_mead(F&& f, const Point<N>& start, const SimplexOptions& opts) {
  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
  auto eval = [&](const Point<N>& x) {
    const double v = f(x);
    return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
  };

  std::array<Point<N>, N + 1> pts;
  std::array<double, N + 1> val;
  pts[0] = start;
  val[0] = eval(start);
  for (std::size_t i = 0; i < N; ++i) {
    pts[i + 1] = start;
    pts[i + 1][i] += opts.initial_step;
    val[i + 1] = eval(pts[i + 1]);
  }

  std::array<std::size_t, N + 1> order;
  Outcome<N> out;
  for (out.iterations = 0; out.iterations < opts.max_iterations; ++out.iterations) {
    for (std::size_t i = 0; i <= N; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return val[a] > val[b]; });
    const std::size_t best = order[0];
    const std::size_t worst = order[N];
    const std::size_t second_worst = order[N > 0 ? N - 1 : 0];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        diameter = std::max(diameter, std::abs(pts[i][k] - pts[best][k]));
      }
    }
    const double spread = std::abs(val[best] - val[worst]);
    if (std::isfinite(val[best]) && diameter <= opts.x_tolerance &&
        spread <= opts.f_tolerance * (1.0 + std::abs(val[best]))) {
      out.converged = true;
      break;
    }

    Point<N> centroid{};
    for (std::size_t i = 0; i < N; ++i) {
      const std::size_t idx = order[i];
      for (std::size_t k = 0; k < N; ++k) centroid[k] += pts[idx][k] / static_cast<double>(N);
    }
    auto along = [&](double coef) {
      Point<N> p;
      for (std::size_t k = 0; k < N; ++k) p[k] = centroid[k] + coef * (pts[worst][k] - centroid[k]);
      return p;
    };

    const Point<N> reflected = along(-kReflect);
    const double fr = eval(reflected);
    if (fr > val[best]) {
      const Point<N> expanded = along(-kExpand);
      const double fe = eval(expanded);
      if (fe > fr) {
        pts[worst] = expanded;
        val[worst] = fe;
      } else {
        pts[worst] = reflected;
        val[worst] = fr;
      }
      continue;
    }
    if (fr > val[second_worst]) {
      pts[worst] = reflected;
      val[worst] = fr;
      continue;
    }
    const bool outside = fr > val[worst];
    const Point<N> contracted = along(outside ? -kContract : kContract);
    const double fc = eval(contracted);
    if (fc > std::max(fr, val[worst]) || (outside && fc >= fr)) {
      pts[worst] = contracted;
      val[worst] = fc;
      continue;
    }
    for (std::size_t i = 1; i <= N; ++i) {
      const std::size_t idx = order[i];
      for (std::size_t k = 0; k < N; ++k) {
        pts[idx][k] = pts[best][k] + kShrink * (pts[idx][k] - pts[best][k]);
      }
      val[idx] = eval(pts[idx]);
    }
  }
  const auto best = static_cast<std::size_t>(std::max_element(val.begin(), val.end()) - val.begin());
  out.x = pts[best];
  out.value = val[best];
  return out;
}

struct NewtonOptions {
  double step_tolerance = 1e-9;
  double hessian_step = 1e-5;
  std::size_t max_iterations = 50;
  std::size_t max_halvings = 30;
};

namespace detail {

template <std::size_t N>
double norm(const Point<N>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Solves H d = -g for d. Returns false when H is not negative definite.
template <std::size_t N>
bool ascent_direction(const std::array<Point<N>, N>& h, const Point<N>& g, Point<N>& d) {
  if constexpr (N == 1) {
    if (!(h[0][0] < 0.0)) return false;
    d[0] = -g[0] / h[0][0];
    return true;
  } else if constexpr (N == 2) {
    const double a = h[0][0], b = 0.5 * (h[0][1] + h[1][0]), c = h[1][1];
    const double det = a * c - b * b;
    if (!(a < 0.0) || !(det > 0.0)) return false;
    d[0] = -(c * g[0] - b * g[1]) / det;
    d[1] = -(a * g[1] - b * g[0]) / det;
    return true;
  } else {
    static_assert(N <= 2, "ascent_direction implemented for N <= 2");
    return false;
  }
}

}  // namespace detail

// Newton iterations on a smooth maximum. grad returns the analytic gradient of
// f at x. Each step is halved until f increases; once changes in f drop to
// rounding level, a step that shrinks the gradient is accepted instead.
template <std::size_t N, class F, class G>
Outcome<N> newton_polish(F&& f, G&& grad, const Point<N>& start, const NewtonOptions& opts) {
  Outcome<N> out;
  out.x = start;
  out.value = f(start);
  if (!std::isfinite(out.value)) return out;

  for (out.iterations = 0; out.iterations < opts.max_iterations; ++out.iterations) {
    const Point<N> g = grad(out.x);
    std::array<Point<N>, N> h{};
    for (std::size_t k = 0; k < N; ++k) {
      Point<N> up = out.x, down = out.x;
      up[k] += opts.hessian_step;
      down[k] -= opts.hessian_step;
      const Point<N> gu = grad(up), gd = grad(down);
      for (std::size_t r = 0; r < N; ++r) h[r][k] = (gu[r] - gd[r]) / (2.0 * opts.hessian_step);
    }
    Point<N> d{};
    if (!detail::ascent_direction<N>(h, g, d)) return out;
    using detail::norm;

    // Below the rounding floor of f a step is judged by the gradient instead.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(out.value));
    const double gnorm = norm(g);
    double scale = 1.0;
    bool accepted = false;
    Point<N> trial{};
    double trial_value = 0.0;
    for (std::size_t k = 0; k <= opts.max_halvings; ++k, scale *= 0.5) {
      for (std::size_t i = 0; i < N; ++i) trial[i] = out.x[i] + scale * d[i];
      trial_value = f(trial);
      if (!std::isfinite(trial_value)) continue;
      if (trial_value > out.value + floor ||
          (trial_value >= out.value - floor && norm(grad(trial)) < gnorm)) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      // At the resolution limit of f the step cannot be verified; a tiny
      // Newton step there still indicates a stationary point.
      double step = 0.0;
      for (std::size_t i = 0; i < N; ++i) step = std::max(step, std::abs(d[i]));
      out.converged = step <= opts.step_tolerance;
      return out;
    }
    double step = 0.0;
    for (std::size_t i = 0; i < N; ++i) step = std::max(step, std::abs(trial[i] - out.x[i]));
    out.x = trial;
    out.value = trial_value;
    if (step <= opts.step_tolerance) {
      out.converged = true;
      ++out.iterations;
      return out;
    }
  }
  return out;
}

}  // namespace lldpd::optimize
