#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "lldpd/asymptotics.hpp"
#include "oracles/quadrature.hpp"

using namespace lldpd;

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// int s_i s_j f^(1+tau) (i, j in {0: alpha, 1: beta, 2: none})
double quad(const Params& p, double tau, int i, int j) {
  return oracle::integrate_positive(
      [&](double x) {
        const Score sc = score(p, x);
        const double v[3] = {sc.alpha, sc.beta, 1.0};
        return v[i] * v[j] * std::exp((1 + tau) * log_pdf(p, x));
      },
      p.alpha());
}

}  // namespace

TEST(FisherLimits, Exact) {
  EXPECT_NEAR(j_alpha(Params(1, 2), Tau(0)), 4.0 / 3.0, 1e-10);
  EXPECT_NEAR(j_alpha(Params(2, 2), Tau(0)), 1.0 / 3.0, 1e-10);
  for (double a : {0.5, 1.0, 7.0}) EXPECT_NEAR(j_beta(Params(a, 2), Tau(0)), (3 + kPi2) / 36.0, 1e-10);
  EXPECT_NEAR(k_alpha(Params(1, 2), Tau(0)), 4.0 / 3.0, 1e-10);
  EXPECT_NEAR(k_beta(Params(1, 2), Tau(0)), (3 + kPi2) / 36.0, 1e-10);
  for (double b : {1.5, 2.5, 10.0}) {
    const Params p(1.3, b);
    EXPECT_NEAR(xi_alpha(p, Tau(0)), 0.0, 1e-12);
    EXPECT_NEAR(xi_beta(p, Tau(0)), 0.0, 1e-12);
    EXPECT_NEAR(j_cross(p, Tau(0)), 0.0, 1e-12);
  }
}

TEST(ClosedForms, Examples) {
  const Params p(1, 2);
  EXPECT_LT(rel(j_alpha(p, Tau(0.5)), quad(p, 0.5, 0, 0)), 1e-6);
  EXPECT_LT(rel(xi_alpha(p, Tau(0.5)), quad(p, 0.5, 0, 2)), 1e-6);
  EXPECT_LT(rel(j_beta(Params(1, 2.5), Tau(0.5)), quad(Params(1, 2.5), 0.5, 1, 1)), 1e-6);
  EXPECT_LT(rel(xi_beta(p, Tau(0.5)), quad(p, 0.5, 1, 2)), 1e-6);
  EXPECT_LT(rel(j_cross(p, Tau(0.5)), quad(p, 0.5, 0, 1)), 1e-6);
  const double xi = quad(p, 0.3, 0, 2);
  EXPECT_LT(rel(k_alpha(p, Tau(0.3)), quad(p, 0.6, 0, 0) - xi * xi), 1e-6);
  const double xb = quad(p, 0.3, 1, 2);
  EXPECT_LT(rel(k_beta(p, Tau(0.3)), quad(p, 0.6, 1, 1) - xb * xb), 1e-6);
}

TEST(ClosedForms, MatchQuadratureOnGrid) {
  for (double a : {0.5, 1.0, 2.0})
    for (double b : {1.5, 2.5, 5.0, 10.0})
      for (double t : {0.1, 0.25, 0.5, 0.75, 1.0}) {
        const Params p(a, b);
        const Tau tau(t);
        const double xa = quad(p, t, 0, 2), xb = quad(p, t, 1, 2);
        EXPECT_LT(rel(j_alpha(p, tau), quad(p, t, 0, 0)), 1e-6) << a << "," << b << "," << t;
        EXPECT_LT(rel(xi_alpha(p, tau), xa), 1e-6) << a << "," << b << "," << t;
        EXPECT_LT(rel(j_beta(p, tau), quad(p, t, 1, 1)), 1e-6) << a << "," << b << "," << t;
        EXPECT_LT(rel(xi_beta(p, tau), xb), 1e-6) << a << "," << b << "," << t;
        EXPECT_LT(rel(j_cross(p, tau), quad(p, t, 0, 1)), 1e-6) << a << "," << b << "," << t;
        EXPECT_LT(rel(k_alpha(p, tau), quad(p, 2 * t, 0, 0) - xa * xa), 1e-6) << a << "," << b << "," << t;
        EXPECT_LT(rel(k_beta(p, tau), quad(p, 2 * t, 1, 1) - xb * xb), 1e-6) << a << "," << b << "," << t;
        EXPECT_LT(xi_alpha(p, tau), 0.0);
        EXPECT_GT(k_alpha(p, tau), 0.0);
        EXPECT_GT(k_beta(p, tau), 0.0);
      }
}

TEST(ClosedForms, ScaleBehaviour) {
  for (double c : {0.2, 3.0}) {
    const Tau t(0.4);
    EXPECT_LT(rel(xi_beta(Params(c, 2.5), t), std::pow(c, -0.4) * xi_beta(Params(1, 2.5), t)), 1e-12);
  }
  EXPECT_NEAR(j_beta(Params(1, 3), Tau(0)), j_beta(Params(7, 3), Tau(0)), 1e-14);
}

TEST(ClosedForms, SmallTauLimits) {
  const Params p(1.3, 2.7);
  const Tau t(1e-6);
  EXPECT_NEAR(xi_alpha(p, t), 0.0, 1e-5);
  EXPECT_NEAR(xi_beta(p, t), 0.0, 1e-5);
  EXPECT_NEAR(j_cross(p, t), 0.0, 1e-5);
  const AsymptoticMatrices m = sandwich(p, t);
  const double va = 3 * p.alpha() * p.alpha() / (p.beta() * p.beta());
  const double vb = 9 * p.beta() * p.beta() / (3 + kPi2);
  EXPECT_NEAR(m.sandwich[0][0], va, 1e-6 * va * 10);
  EXPECT_NEAR(m.sandwich[1][1], vb, 1e-6 * vb * 10);
  EXPECT_NEAR(m.sandwich[0][1], 0.0, 1e-4);
}

TEST(Sandwich, FisherInverseAtZero) {
  const AsymptoticMatrices m = sandwich(Params(1, 2), Tau(0));
  EXPECT_NEAR(m.sandwich[0][0], 0.75, 1e-12);
  EXPECT_NEAR(m.sandwich[1][1], 36.0 / (3 + kPi2), 1e-10);
  EXPECT_NEAR(m.sandwich[0][1], 0.0, 1e-12);
  EXPECT_EQ(m.sandwich[0][1], m.sandwich[1][0]);
  EXPECT_EQ(m.k[0][1], m.k[1][0]);
  EXPECT_EQ(m.j[0][1], m.j[1][0]);
}

TEST(Sandwich, MatchesQuadratureMatrices) {
  const Params p(1, 2.5);
  const double t = 0.3;
  const AsymptoticMatrices m = sandwich(p, Tau(t));
  const double xi[2] = {quad(p, t, 0, 2), quad(p, t, 1, 2)};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      EXPECT_LT(rel(m.j[r][c], quad(p, t, r, c)), 1e-6);
      EXPECT_LT(rel(m.k[r][c], quad(p, 2 * t, r, c) - xi[r] * xi[c]), 1e-6);
    }
  // PSD
  EXPECT_GT(m.sandwich[0][0], 0.0);
  EXPECT_GT(m.sandwich[0][0] * m.sandwich[1][1] - m.sandwich[0][1] * m.sandwich[1][0], 0.0);
  EXPECT_GE(m.condition_number, 1.0);
}

TEST(Sandwich, EfficiencyDecreasesWithTau) {
  const Params p(1, 2.5);
  double pa = 0, pb = 0;
  for (int k = 0; k <= 10; ++k) {
    const AsymptoticMatrices m = sandwich(p, Tau(k / 10.0));
    EXPECT_GE(m.sandwich[0][0], pa);
    EXPECT_GE(m.sandwich[1][1], pb);
    pa = m.sandwich[0][0];
    pb = m.sandwich[1][1];
  }
}

TEST(Sandwich, ScaleFamily) {
  const Tau t(0.5);
  const AsymptoticMatrices a = sandwich(Params(1, 3), t);
  const AsymptoticMatrices b = sandwich(Params(4, 3), t);
  EXPECT_LT(rel(b.sandwich[0][0], 16 * a.sandwich[0][0]), 1e-12);
  EXPECT_LT(rel(b.sandwich[1][1], a.sandwich[1][1]), 1e-12);
}

TEST(Sandwich, GuardsAndInverse) {
  EXPECT_THROW(sandwich(Params(1, 0.3), Tau(1.0)), DomainError);
  EXPECT_THROW(inverse(Matrix2{{{1, 2}, {2, 4}}}), ConditioningError);
  const Matrix2 m{{{2, 1}, {1, 3}}};
  const Matrix2 id = multiply(m, inverse(m));
  EXPECT_NEAR(id[0][0], 1, 1e-15);
  EXPECT_NEAR(id[0][1], 0, 1e-15);
  EXPECT_NEAR(id[1][1], 1, 1e-15);
}

TEST(Sandwich, VarianceOfScoreFunctionalUsesSquaredXi) {
  // K = Var_f(f^tau s) = int s^2 f^(1+2tau) - xi^2; the unsquared variant differs.
  const Params p(1, 2);
  const double t = 0.5;
  const double mean = quad(p, t, 1, 2);
  const double second = quad(p, 2 * t, 1, 1);
  EXPECT_LT(rel(k_beta(p, Tau(t)), second - mean * mean), 1e-8);
  EXPECT_GT(std::abs(k_beta(p, Tau(t)) - (second - mean)), 1e-3);
}
