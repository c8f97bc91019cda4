#pragma once

// Monte-Carlo comparison of estimators under the five contamination schemes.
//
// Replication r draws from the substream r of the master seed: first the n
// clean observations, then the contaminating values. The data therefore do
// not depend on which estimators are run or on the worker count.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "lldpd/competitors.hpp"
#include "lldpd/dpd.hpp"
#include "lldpd/errors.hpp"
#include "lldpd/fit.hpp"
#include "lldpd/loglogistic.hpp"

namespace lldpd {

enum class CaseId : int {
  Clean = 1,
  LowShape = 2,     // log-logistic(1, 0.2)
  ShiftedScale = 3, // log-logistic(4, 10)
  Uniform = 4,      // U(0, 20)
  Constant = 5,     // the value 50
};

inline CaseId case_from_int(int id) {
  if (id < 1 || id > 5) throw DomainError("contamination case must be 1..5, got " + std::to_string(id));
  return static_cast<CaseId>(id);
}

struct DpdEstimator {
  double tau;
};

using Estimator = std::variant<DpdEstimator, CompetitorMethod>;

inline std::string estimator_label(const Estimator& e) {
  if (const auto* d = std::get_if<DpdEstimator>(&e)) {
    if (d->tau == 0.0) return "MLE";
    char buf[32];
    std::snprintf(buf, sizeof buf, "DPD_%g", d->tau);
    return buf;
  }
  return std::string(to_string(std::get<CompetitorMethod>(e)));
}

// MLE, DPD with tau = 0.1, ..., 1.0, RM, SM, HL.
inline std::vector<Estimator> default_estimators() {
  std::vector<Estimator> out{DpdEstimator{0.0}};
  for (int k = 1; k <= 10; ++k) out.push_back(DpdEstimator{k / 10.0});
  out.push_back(CompetitorMethod::RM);
  out.push_back(CompetitorMethod::SM);
  out.push_back(CompetitorMethod::HL);
  return out;
}

struct ScenarioSpec {
  Params truth{1.0, 2.5};
  std::size_t n = 25;
  std::size_t replications = 1000;
  CaseId contamination = CaseId::Clean;
  std::vector<Estimator> estimators = default_estimators();
  std::uint64_t seed = 20240101;
  std::size_t workers = 0;  // 0: hardware concurrency
  std::size_t contaminated_count = 3;
  PlottingPosition rm_position = PlottingPosition::Weibull;
  FitOptions fit_options{};
};

struct MetricsRow {
  std::string estimator;
  double mean_bias;
  double rmse;
  double mean_alpha_hat;
  double mean_beta_hat;
  std::size_t n_failed;
};

inline void validate(const ScenarioSpec& spec) {
  if (spec.replications < 1) throw DomainError("scenario: replications must be >= 1");
  if (spec.n < 2) throw DomainError("scenario: n must be >= 2");
  if (spec.contamination != CaseId::Clean && spec.n < spec.contaminated_count + 1) {
    throw DomainError("scenario: contamination cases 2-5 need n >= " +
                      std::to_string(spec.contaminated_count + 1));
  }
  for (const Estimator& e : spec.estimators) {
    if (const auto* d = std::get_if<DpdEstimator>(&e)) Tau{d->tau};
  }
}

// Replaces the first `count` observations according to the contamination case.
inline Sample contaminate(const Sample& s, CaseId id, RandomStream& rng, std::size_t count = 3) {
  if (id == CaseId::Clean) return s;
  if (static_cast<int>(id) < 1 || static_cast<int>(id) > 5) {
    throw DomainError("contaminate: unknown case id");
  }
  if (s.size() < count + 1) {
    throw DomainError("contaminate: need n >= " + std::to_string(count + 1));
  }
  std::vector<double> v(s.begin(), s.end());
  for (std::size_t i = 0; i < count; ++i) {
    switch (id) {
      case CaseId::LowShape: v[i] = quantile(Params(1.0, 0.2), rng.uniform()); break;
      case CaseId::ShiftedScale: v[i] = quantile(Params(4.0, 10.0), rng.uniform()); break;
      case CaseId::Uniform: v[i] = 20.0 * rng.uniform(); break;
      case CaseId::Constant: v[i] = 50.0; break;
      case CaseId::Clean: break;
    }
  }
  return Sample(std::move(v));
}

// Draws the (possibly contaminated) sample of replication r.
inline Sample replication_sample(const ScenarioSpec& spec, std::uint64_t r) {
  RandomStream rng = RandomStream(spec.seed).substream(r);
  const Sample clean = sample(spec.truth, spec.n, rng);
  return contaminate(clean, spec.contamination, rng, spec.contaminated_count);
}

// Runs one estimator; nullopt on failure (exception or non-converged fit).
inline std::optional<Params> run_estimator(const Estimator& e, const Sample& s,
                                           const ScenarioSpec& spec) {
  try {
    if (const auto* d = std::get_if<DpdEstimator>(&e)) {
      const FitResult r = fit_joint(s, Tau(d->tau), spec.fit_options);
      if (!r.converged) return std::nullopt;
      return r.params_hat;
    }
    switch (std::get<CompetitorMethod>(e)) {
      case CompetitorMethod::RM: return estimate_rm(s, spec.rm_position).params();
      case CompetitorMethod::SM: return estimate_sm(s).params();
      case CompetitorMethod::HL: return estimate_hl(s).params();
    }
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

namespace detail {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace detail

// Per-replication estimates: estimates[r][e] for replication r and estimator e.
using ReplicationEstimates = std::vector<std::vector<std::optional<Params>>>;

inline ReplicationEstimates run_replications(const ScenarioSpec& spec) {
  validate(spec);
  ReplicationEstimates out(spec.replications);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t r = next++; r < spec.replications; r = next++) {
      const Sample s = replication_sample(spec, r);
      auto& row = out[r];
      row.reserve(spec.estimators.size());
      for (const Estimator& e : spec.estimators) row.push_back(run_estimator(e, s, spec));
    }
  };
  std::size_t workers = spec.workers != 0 ? spec.workers : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, spec.replications);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return out;
}

inline std::vector<MetricsRow> aggregate(const ScenarioSpec& spec, const ReplicationEstimates& est) {
  std::vector<MetricsRow> rows;
  rows.reserve(spec.estimators.size());
  const double a0 = spec.truth.alpha();
  const double b0 = spec.truth.beta();
  for (std::size_t e = 0; e < spec.estimators.size(); ++e) {
    detail::CompensatedSum bias, sq, alpha, beta;
    std::size_t ok = 0;
    std::size_t failed = 0;
    for (const auto& rep : est) {
      const auto& p = rep[e];
      if (!p) {
        ++failed;
        continue;
      }
      const double da = p->alpha() - a0;
      const double db = p->beta() - b0;
      bias.add(std::abs(da) + std::abs(db));
      sq.add(da * da + db * db);
      alpha.add(p->alpha());
      beta.add(p->beta());
      ++ok;
    }
    const double m = static_cast<double>(ok);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    rows.push_back({estimator_label(spec.estimators[e]), ok ? bias.value() / m : nan,
                    ok ? std::sqrt(sq.value() / m) : nan, ok ? alpha.value() / m : nan,
                    ok ? beta.value() / m : nan, failed});
  }
  return rows;
}

inline std::vector<MetricsRow> replicate_metrics(const ScenarioSpec& spec) {
  return aggregate(spec, run_replications(spec));
}

}  // namespace lldpd
