#pragma once

// Test-only reference integrator: globally adaptive 15-point Gauss-Kronrod.
// Independent of every closed form in the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <queue>

namespace oracle {

struct QuadResult {
  double value;
  double error;
};

namespace detail {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline QuadResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double s = f(c - dx) + f(c + dx);
    kron += kWgk[j] * s;
    if (j % 2 == 1) gauss += kWg[j / 2] * s;
  }
  return {kron * h, std::abs((kron - gauss) * h)};
}

}  // namespace detail

// Integral of f over [a, b]. The piece with the largest error estimate is
// bisected until the summed error meets max(abs_tol, rel_tol |value|) or the
// piece limit is reached.
inline QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                            double abs_tol = 1e-15, double rel_tol = 1e-13,
                            std::size_t max_pieces = 20000) {
  struct Piece {
    double a, b;
    QuadResult r;
    bool operator<(const Piece& o) const { return r.error < o.r.error; }
  };
  std::priority_queue<Piece> heap;
  heap.push({a, b, detail::gk15(f, a, b)});
  double value = heap.top().r.value;
  double error = heap.top().r.error;
  while (heap.size() < max_pieces && error > std::max(abs_tol, rel_tol * std::abs(value))) {
    const Piece worst = heap.top();
    heap.pop();
    const double m = 0.5 * (worst.a + worst.b);
    const Piece l{worst.a, m, detail::gk15(f, worst.a, m)};
    const Piece r{m, worst.b, detail::gk15(f, m, worst.b)};
    value += l.r.value + r.r.value - worst.r.value;
    error += l.r.error + r.r.error - worst.r.error;
    heap.push(l);
    heap.push(r);
  }
  QuadResult total{0.0, 0.0};
  for (; !heap.empty(); heap.pop()) {
    total.value += heap.top().r.value;
    total.error += heap.top().r.error;
  }
  return total;
}

// Integral of g over (0, inf) via t = u / (1 - u), u in (0, 1).
inline QuadResult integrate_half_line(const std::function<double(double)>& g, double abs_tol = 1e-15) {
  auto h = [&](double u) {
    const double one_minus = 1.0 - u;
    const double v = g(u / one_minus) / (one_minus * one_minus);
    return std::isfinite(v) ? v : 0.0;
  };
  return integrate(h, 0.0, 1.0, abs_tol);
}

// Integral of g over (0, inf) for integrands concentrated around `center` on
// a log scale: x = center * exp(s), each half-line in s mapped as above.
inline double integrate_positive(const std::function<double(double)>& g, double center,
                                 double abs_tol = 1e-15) {
  auto at = [&](double x) { return std::isfinite(x) && x > 0.0 ? g(x) * x : 0.0; };
  auto upper = [&](double s) { return at(center * std::exp(s)); };
  auto lower = [&](double s) { return at(center * std::exp(-s)); };
  return integrate_half_line(upper, abs_tol).value + integrate_half_line(lower, abs_tol).value;
}

}  // namespace oracle
