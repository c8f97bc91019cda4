#pragma once

// The two-parameter log-logistic distribution
//
//   f(x; alpha, beta) = beta alpha^beta x^(beta-1) / (x^beta + alpha^beta)^2,  x > 0,
//
// with scale alpha (the median) and shape beta. Densities are evaluated through
// log_pdf so that large shapes and large x stay finite.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lldpd/errors.hpp"
#include "lldpd/specfun.hpp"

namespace lldpd {

class Params {
 public:
  Params(double alpha, double beta) : alpha_(check(alpha, "alpha")), beta_(check(beta, "beta")) {}

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  static double check(double v, const char* name) {
    if (!(std::isfinite(v) && v > 0.0)) {
      throw DomainError(std::string("Params: ") + name + " must be finite and > 0, got " +
                        std::to_string(v));
    }
    return v;
  }

  double alpha_;
  double beta_;
};

// Non-empty collection of finite, strictly positive observations.
class Sample {
 public:
  explicit Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw DomainError("Sample: at least one observation is required");
    for (std::size_t i = 0; i < values_.size(); ++i) {
      const double v = values_[i];
      if (!(std::isfinite(v) && v > 0.0)) {
        throw DataDomainError("Sample: observation " + std::to_string(i + 1) +
                                  " is not finite and positive (" + std::to_string(v) + ")",
                              i + 1);
      }
    }
  }
  Sample(std::initializer_list<double> values) : Sample(std::vector<double>(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

 private:
  std::vector<double> values_;
};

// Seedable random stream with a deterministic substream split. Two streams
// built from the same (seed, index) produce identical sequences on every
// platform: the engine and std::seed_seq are fully specified by the standard,
// and uniform() does its own bit-to-double conversion.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(splitmix(seed ^ splitmix(stream + 0x632BE59BD9B4E019ULL))), engine_(seeded(key_)) {}

  // Uniform draw on the open interval (0, 1).
  double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

  // Independent child stream; depends only on this stream's (seed, stream)
  // lineage and the index, never on how many draws were taken so far.
  RandomStream substream(std::uint64_t index) const { return RandomStream(key_, index); }

 private:
  static std::mt19937_64 seeded(std::uint64_t key) {
    std::seed_seq seq{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)};
    return std::mt19937_64(seq);
  }

  static std::uint64_t splitmix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::mt19937_64 engine_;
};

namespace detail {

inline void require_support(double x, const char* fn) {
  if (!(std::isfinite(x) && x > 0.0)) {
    throw DomainError(std::string(fn) + ": x must be finite and > 0, got " + std::to_string(x));
  }
}

// log(1 + exp(z)) without overflow.
inline double softplus(double z) {
  return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

}  // namespace detail

inline double log_pdf(const Params& p, double x) {
  detail::require_support(x, "pdf");
  const double u = std::log(x / p.alpha());
  return std::log(p.beta() / p.alpha()) + (p.beta() - 1.0) * u -
         2.0 * detail::softplus(p.beta() * u);
}

inline double pdf(const Params& p, double x) { return std::exp(log_pdf(p, x)); }

inline double cdf(const Params& p, double x) {
  detail::require_support(x, "cdf");
  if (x == p.alpha()) return 0.5;
  const double z = p.beta() * std::log(x / p.alpha());
  return 1.0 / (1.0 + std::exp(-z));
}

inline double quantile(const Params& p, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw DomainError("quantile: u must lie in (0, 1), got " + std::to_string(u));
  }
  return p.alpha() * std::exp(std::log(u / (1.0 - u)) / p.beta());
}

// n i.i.d. draws by inverse transform.
inline Sample sample(const Params& p, std::size_t n, RandomStream& rng) {
  if (n == 0) throw DomainError("sample: n must be >= 1");
  std::vector<double> out(n);
  for (auto& v : out) v = quantile(p, rng.uniform());
  return Sample(std::move(out));
}

// E[X^k] = alpha^k B(1 - k/beta, 1 + k/beta); infinite when k >= beta.
inline double raw_moment(const Params& p, int k) {
  if (k < 1) throw DomainError("raw_moment: k must be >= 1");
  if (static_cast<double>(k) >= p.beta()) {
    throw MomentDoesNotExist("raw_moment: E[X^" + std::to_string(k) +
                             "] is infinite for beta = " + std::to_string(p.beta()));
  }
  const double r = k / p.beta();
  return std::pow(p.alpha(), k) * beta_fn(1.0 - r, 1.0 + r);
}

}  // namespace lldpd
