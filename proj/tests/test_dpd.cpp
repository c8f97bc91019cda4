#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "lldpd/dpd.hpp"
#include "oracles/finite_diff.hpp"
#include "oracles/quadrature.hpp"

using namespace lldpd;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double quad_integral(const Params& p, double tau) {
  return oracle::integrate_positive([&](double x) { return std::exp((1 + tau) * log_pdf(p, x)); },
                                    p.alpha());
}

Sample draw(const Params& p, std::size_t n, std::uint64_t seed) {
  RandomStream rng(seed);
  return sample(p, n, rng);
}

}  // namespace

TEST(TauType, Validates) {
  EXPECT_TRUE(Tau(0.0).is_likelihood());
  EXPECT_FALSE(Tau(0.1).is_likelihood());
  EXPECT_THROW(Tau(-0.1), DomainError);
  EXPECT_THROW(Tau(NAN), DomainError);
}

TEST(IntegralTerm, Examples) {
  EXPECT_NEAR(integral_term(Params(1, 1), Tau(1)), 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(integral_term(Params(3, 2), Tau(0)), 1.0, 1e-14);
  EXPECT_LT(rel(integral_term(Params(1, 2), Tau(0.5)), quad_integral(Params(1, 2), 0.5)), 1e-8);
}

TEST(IntegralTerm, MatchesQuadratureOnGrid) {
  for (double a : {0.5, 1.0, 2.0})
    for (double b : {1.5, 2.5, 5.0, 10.0})
      for (double t : {0.1, 0.25, 0.5, 0.75, 1.0}) {
        const Params p(a, b);
        EXPECT_LT(rel(integral_term(p, Tau(t)), quad_integral(p, t)), 1e-8) << a << "," << b << "," << t;
      }
}

TEST(IntegralTerm, GuardsSecondBetaArgument) {
  // beta (tau + 1) <= tau
  EXPECT_THROW(integral_term(Params(1, 0.4), Tau(1.0)), DomainError);
  EXPECT_THROW(integral_term(Params(1, 0.5), Tau(1.0)), DomainError);
  EXPECT_NO_THROW(integral_term(Params(1, 0.51), Tau(1.0)));
}

TEST(Objective, Examples) {
  const Sample one{1.0};
  EXPECT_NEAR(objective(one, Params(1, 1), Tau(0)), std::log(0.25), 1e-15);
  // (1 + 1/tau) f^tau - int f^(1+tau) - 1/tau = 2 (1/4) - 1/3 - 1
  EXPECT_NEAR(objective(one, Params(1, 1), Tau(1)), -5.0 / 6.0, 1e-14);
}

TEST(Objective, ContinuousAtZero) {
  const Sample s = draw(Params(1.3, 2.2), 40, 1);
  const Params p(1.1, 2.0);
  const double h0 = objective(s, p, Tau(0));
  // H_tau = H_0 + tau c + O(tau^2): the first difference stabilises.
  const double c4 = (objective(s, p, Tau(1e-4)) - h0) / 1e-4;
  const double c6 = (objective(s, p, Tau(1e-6)) - h0) / 1e-6;
  EXPECT_NEAR(c4, c6, 1e-3 * std::max(1.0, std::abs(c6)));
  EXPECT_NEAR(objective(s, p, Tau(1e-8)), h0, 1e-6);
}

TEST(Gradient, MatchesFiniteDifferences) {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> ua(0.3, 3.0), ub(0.8, 8.0), ut(0.0, 1.0);
  for (int c = 0; c < 50; ++c) {
    const Params truth(ua(gen), ub(gen));
    const Sample s = draw(truth, 10 + c * 7, 100 + c);
    const double t = c % 5 == 0 ? 0.0 : ut(gen);
    const Params p(truth.alpha() * (0.8 + 0.4 * ut(gen)), truth.beta() * (0.8 + 0.4 * ut(gen)));
    const auto g = gradient(s, p, Tau(t));
    const double fa = oracle::derivative([&](double a) { return objective(s, Params(a, p.beta()), Tau(t)); },
                                         p.alpha());
    const double fb = oracle::derivative([&](double b) { return objective(s, Params(p.alpha(), b), Tau(t)); },
                                         p.beta());
    EXPECT_NEAR(g[0], fa, 1e-6 * (1 + std::abs(g[0]))) << "case " << c;
    EXPECT_NEAR(g[1], fb, 1e-6 * (1 + std::abs(g[1]))) << "case " << c;
  }
}

TEST(Gradient, LargeSampleExample) {
  const Sample s = draw(Params(1, 2), 200, 9);
  const Params p(1.1, 1.9);
  const auto g = gradient(s, p, Tau(0.5));
  EXPECT_TRUE(oracle::close_mixed(
      g[0], oracle::derivative([&](double a) { return objective(s, Params(a, 1.9), Tau(0.5)); }, 1.1), 1e-6));
  EXPECT_TRUE(oracle::close_mixed(
      g[1], oracle::derivative([&](double b) { return objective(s, Params(1.1, b), Tau(0.5)); }, 1.9), 1e-6));
}

TEST(Gradient, AlphaComponentCancelsForLogSymmetricSample) {
  // (x_i / alpha)^beta (x_j / alpha)^beta = 1 pairwise
  const double a = 2.0;
  const Sample s{a / 3, a * 3, a / 1.5, a * 1.5, a};
  EXPECT_NEAR(gradient(s, Params(a, 1.7), Tau(0))[0], 0.0, 1e-14);
}

TEST(Gradient, IntegralDerivativeIdentity) {
  // d/d theta int f^(1+tau) = (1 + tau) int s f^(1+tau)
  const Params p(1.4, 3.0);
  const double t = 0.4;
  const double da = oracle::derivative([&](double a) { return integral_term(Params(a, 3.0), Tau(t)); }, 1.4);
  const double db = oracle::derivative([&](double b) { return integral_term(Params(1.4, b), Tau(t)); }, 3.0);
  auto weighted = [&](bool alpha) {
    return oracle::integrate_positive(
        [&](double x) {
          const Score sc = score(p, x);
          return (alpha ? sc.alpha : sc.beta) * std::exp((1 + t) * log_pdf(p, x));
        },
        p.alpha());
  };
  EXPECT_NEAR(da, (1 + t) * weighted(true), 1e-8);
  EXPECT_NEAR(db, (1 + t) * weighted(false), 1e-8);
}

TEST(Score, ZeroMeanUnderModel) {
  const Params p(2.0, 4.0);
  const double ea = oracle::integrate_positive([&](double x) { return score(p, x).alpha * pdf(p, x); }, 2.0);
  const double eb = oracle::integrate_positive([&](double x) { return score(p, x).beta * pdf(p, x); }, 2.0);
  EXPECT_NEAR(ea, 0.0, 1e-12);
  EXPECT_NEAR(eb, 0.0, 1e-12);
}
