#pragma once

// Robust comparators built on the log-data z_i = log x_i: repeated-median
// regression on the logistic probability plot (RM), sample median / MAD (SM)
// and Hodges-Lehmann location with Shamos scale (HL).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lldpd/errors.hpp"
#include "lldpd/loglogistic.hpp"

namespace lldpd {

enum class CompetitorMethod { RM, SM, HL };

inline std::string_view to_string(CompetitorMethod m) {
  switch (m) {
    case CompetitorMethod::RM: return "RM";
    case CompetitorMethod::SM: return "SM";
    case CompetitorMethod::HL: return "HL";
  }
  return "?";
}

struct CompetitorEstimate {
  double alpha_hat;
  double beta_hat;
  CompetitorMethod method;

  Params params() const { return Params(alpha_hat, beta_hat); }
};

// Plotting position assigned to the i-th order statistic (1-based) by RM.
enum class PlottingPosition {
  Weibull,  // i / (n + 1)
  Hazen,    // (i - 0.5) / n
};

// Phi^{-1}(3/4).
inline constexpr double kNormalQuartile = 0.674489750196082;

// Median of a copy; even lengths average the two central order statistics.
inline double median(std::vector<double> v) {
  if (v.empty()) throw DomainError("median of an empty collection");
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + mid);
  return 0.5 * (lower + upper);
}

namespace detail {

inline std::vector<double> log_values(const Sample& s) {
  std::vector<double> z(s.size());
  std::transform(s.begin(), s.end(), z.begin(), [](double x) { return std::log(x); });
  return z;
}

inline CompetitorEstimate finish(double log_alpha, double beta, CompetitorMethod m) {
  const double alpha = std::exp(log_alpha);
  if (!(std::isfinite(beta) && beta > 0.0 && std::isfinite(alpha) && alpha > 0.0)) {
    throw DegenerateSampleError(std::string(to_string(m)) +
                                ": estimate is not finite and positive");
  }
  return {alpha, beta, m};
}

}  // namespace detail

inline CompetitorEstimate estimate_rm(const Sample& s,
                                      PlottingPosition pos = PlottingPosition::Weibull) {
  const std::size_t n = s.size();
  if (n < 3) throw DomainError("RM: at least 3 observations are required");
  std::vector<double> z = detail::log_values(s);
  std::sort(z.begin(), z.end());
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double rank = static_cast<double>(i + 1);
    const double F = pos == PlottingPosition::Weibull ? rank / (n + 1.0) : (rank - 0.5) / n;
    y[i] = std::log(F / (1.0 - F));
  }

  std::vector<double> inner;
  inner.reserve(n);
  std::vector<double> slopes;
  slopes.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    slopes.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || z[j] == z[i]) continue;
      slopes.push_back((y[i] - y[j]) / (z[i] - z[j]));
    }
    if (slopes.empty()) {
      throw DegenerateSampleError("RM: every pair with observation " + std::to_string(i + 1) +
                                  " has equal values");
    }
    inner.push_back(median(slopes));
  }
  const double b1 = median(inner);
  if (!(b1 > 0.0)) throw DegenerateSampleError("RM: slope estimate is not positive");
  std::vector<double> intercepts(n);
  for (std::size_t i = 0; i < n; ++i) intercepts[i] = y[i] - b1 * z[i];
  const double b0 = median(std::move(intercepts));
  return detail::finish(-b0 / b1, b1, CompetitorMethod::RM);
}

inline CompetitorEstimate estimate_sm(const Sample& s) {
  if (s.size() < 2) throw DomainError("SM: at least 2 observations are required");
  std::vector<double> z = detail::log_values(s);
  const double mu = median(z);
  for (double& v : z) v = std::abs(v - mu);
  const double mad = median(std::move(z));
  if (!(mad > 0.0)) throw DegenerateSampleError("SM: median absolute deviation is zero");
  return detail::finish(mu, kNormalQuartile / mad, CompetitorMethod::SM);
}

inline CompetitorEstimate estimate_hl(const Sample& s) {
  const std::size_t n = s.size();
  if (n < 2) throw DomainError("HL: at least 2 observations are required");
  const std::vector<double> z = detail::log_values(s);
  std::vector<double> averages;
  std::vector<double> spreads;
  averages.reserve(n * (n - 1) / 2);
  spreads.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      averages.push_back(0.5 * (z[i] + z[j]));
      spreads.push_back(std::abs(z[i] - z[j]));
    }
  }
  const double mu = median(std::move(averages));
  const double spread = median(std::move(spreads));
  if (!(spread > 0.0)) throw DegenerateSampleError("HL: median pairwise distance is zero");
  return detail::finish(mu, std::sqrt(2.0) * kNormalQuartile / spread, CompetitorMethod::HL);
}

}  // namespace lldpd
