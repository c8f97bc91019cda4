#pragma once

// The four front-end commands as library functions. Each returns the rendered
// document plus an exit status so the CLI stays a thin flag parser.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lldpd/asymptotics.hpp"
#include "lldpd/dpd.hpp"
#include "lldpd/errors.hpp"
#include "lldpd/fit.hpp"
#include "lldpd/influence.hpp"
#include "lldpd/ingest.hpp"
#include "lldpd/loglogistic.hpp"
#include "lldpd/report.hpp"
#include "lldpd/simulation.hpp"

namespace lldpd {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitParse = 3,
  kExitDomain = 4,
  kExitConvergence = 5,
  kExitConditioning = 6,
};

inline std::vector<double> default_tau_grid() {
  std::vector<double> t;
  for (int k = 0; k <= 10; ++k) t.push_back(k / 10.0);
  return t;
}

struct CommandOutput {
  std::string document;
  int exit_code = kExitOk;
};

namespace detail {

inline std::string fmt(const char* spec, double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

inline std::string tau_text(double t) { return fmt("%g", t); }

// Right-aligned text table.
inline std::string render_text(const std::vector<std::string>& header,
                               const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    w[c] = header[c].size();
    for (const auto& r : rows) w[c] = std::max(w[c], r[c].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out << "  ";
      out << std::string(w[c] - cells[c].size(), ' ') << cells[c];
    }
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out.str();
}

inline std::string render_csv(const std::vector<std::string>& header,
                              const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << cells[c];
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out.str();
}

}  // namespace detail

// ---------------------------------------------------------------- fit

struct FitRow {
  FitResult fit;
  double se_alpha;
  double se_beta;
};

inline std::vector<FitRow> fit_rows(const Sample& s, const std::vector<double>& taus,
                                    const FitOptions& opts = {}) {
  std::vector<FitRow> rows;
  const double n = static_cast<double>(s.size());
  for (double t : taus) {
    const Tau tau(t);
    FitRow row{fit_joint(s, tau, opts), std::nan(""), std::nan("")};
    try {
      const AsymptoticMatrices m = sandwich(row.fit.params_hat, tau);
      row.se_alpha = std::sqrt(m.sandwich[0][0] / n);
      row.se_beta = std::sqrt(m.sandwich[1][1] / n);
    } catch (const ConditioningError&) {
    } catch (const DomainError&) {
    }
    rows.push_back(row);
  }
  return rows;
}

inline CommandOutput run_fit(const Sample& s, const std::vector<double>& taus, OutputFormat format,
                             const FitOptions& opts = {}) {
  const std::vector<FitRow> rows = fit_rows(s, taus, opts);
  CommandOutput out;
  for (const FitRow& r : rows) {
    if (!r.fit.converged) out.exit_code = kExitConvergence;
  }
  if (format == OutputFormat::Json) {
    nlohmann::json doc = {{"n", s.size()}, {"fits", nlohmann::json::array()}};
    for (const FitRow& r : rows) {
      doc["fits"].push_back({{"tau", r.fit.tau.value()},
                             {"alpha_hat", r.fit.params_hat.alpha()},
                             {"beta_hat", r.fit.params_hat.beta()},
                             {"se_alpha", detail::json_number(r.se_alpha)},
                             {"se_beta", detail::json_number(r.se_beta)},
                             {"objective", r.fit.objective_value},
                             {"converged", r.fit.converged},
                             {"iterations", r.fit.iterations},
                             {"gradient_norm", r.fit.gradient_norm},
                             {"start", r.fit.start_used}});
    }
    out.document = doc.dump(2) + "\n";
    return out;
  }
  const std::vector<std::string> header{"tau",     "alpha_hat", "beta_hat",  "se_alpha",
                                        "se_beta", "objective", "converged", "iterations"};
  const bool text = format == OutputFormat::Text;
  const char* spec = text ? "%.5f" : "%.17g";
  std::vector<std::vector<std::string>> cells;
  for (const FitRow& r : rows) {
    cells.push_back({detail::tau_text(r.fit.tau.value()), detail::fmt(spec, r.fit.params_hat.alpha()),
                     detail::fmt(spec, r.fit.params_hat.beta()), detail::fmt(spec, r.se_alpha),
                     detail::fmt(spec, r.se_beta), detail::fmt(spec, r.fit.objective_value),
                     r.fit.converged ? "yes" : "no", std::to_string(r.fit.iterations)});
  }
  out.document = text ? "n = " + std::to_string(s.size()) + "\n" + detail::render_text(header, cells)
                      : detail::render_csv(header, cells);
  return out;
}

// ---------------------------------------------------------- asymptotics

inline CommandOutput run_asymptotics(const Params& p, const std::vector<double>& taus,
                                     OutputFormat format) {
  std::vector<AsymptoticMatrices> ms;
  for (double t : taus) ms.push_back(sandwich(p, Tau(t)));
  CommandOutput out;
  if (format == OutputFormat::Json) {
    nlohmann::json doc = {{"alpha", p.alpha()}, {"beta", p.beta()}, {"results", nlohmann::json::array()}};
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const auto& m = ms[i];
      doc["results"].push_back({{"tau", taus[i]},
                                {"j", m.j},
                                {"k", m.k},
                                {"xi", m.xi},
                                {"sandwich", m.sandwich},
                                {"condition_number", m.condition_number}});
    }
    out.document = doc.dump(2) + "\n";
    return out;
  }
  const std::vector<std::string> header{"tau",  "j_aa", "j_ab", "j_bb", "k_aa", "k_ab", "k_bb",
                                        "xi_a", "xi_b", "v_aa", "v_ab", "v_bb", "cond_j"};
  const char* spec = format == OutputFormat::Text ? "%.5f" : "%.17g";
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto& m = ms[i];
    std::vector<std::string> row{detail::tau_text(taus[i])};
    for (double v : {m.j[0][0], m.j[0][1], m.j[1][1], m.k[0][0], m.k[0][1], m.k[1][1], m.xi[0],
                     m.xi[1], m.sandwich[0][0], m.sandwich[0][1], m.sandwich[1][1], m.condition_number}) {
      row.push_back(detail::fmt(spec, v));
    }
    cells.push_back(std::move(row));
  }
  out.document = format == OutputFormat::Text
                     ? "alpha = " + detail::fmt("%g", p.alpha()) + ", beta = " + detail::fmt("%g", p.beta()) +
                           "\n" + detail::render_text(header, cells)
                     : detail::render_csv(header, cells);
  return out;
}

// ------------------------------------------------------------ influence

struct InfluenceRequest {
  Params params{1.0, 2.0};
  IFTarget target = IFTarget::Alpha;
  std::vector<double> taus{0.1, 0.3, 0.9};
  double x_min = 0.01;
  double x_max = 10.0;
  std::size_t points = 200;
  GridScale scale = GridScale::Log;
};

// One x column and one IF column per tau.
inline CommandOutput run_influence(const InfluenceRequest& req, OutputFormat format) {
  const std::vector<double> xs = grid_points(req.x_min, req.x_max, req.points, req.scale);
  std::vector<std::vector<double>> cols;
  for (double t : req.taus) {
    const Tau tau(t);
    std::vector<double> c;
    c.reserve(xs.size());
    for (double x : xs) c.push_back(influence(req.target, req.params, tau, x));
    cols.push_back(std::move(c));
  }
  const std::string name = req.target == IFTarget::Alpha ? "alpha" : "beta";
  CommandOutput out;
  if (format == OutputFormat::Json) {
    nlohmann::json doc = {{"parameter", name}, {"alpha", req.params.alpha()}, {"beta", req.params.beta()},
                          {"x", xs}, {"series", nlohmann::json::array()}};
    for (std::size_t i = 0; i < cols.size(); ++i) {
      doc["series"].push_back({{"tau", req.taus[i]}, {"if", cols[i]}});
    }
    out.document = doc.dump(2) + "\n";
    return out;
  }
  std::vector<std::string> header{"x"};
  for (double t : req.taus) header.push_back("if_" + name + "_tau=" + detail::tau_text(t));
  const char* spec = format == OutputFormat::Text ? "%.6g" : "%.17g";
  std::vector<std::vector<std::string>> cells;
  for (std::size_t r = 0; r < xs.size(); ++r) {
    std::vector<std::string> row{detail::fmt(spec, xs[r])};
    for (const auto& c : cols) row.push_back(detail::fmt(spec, c[r]));
    cells.push_back(std::move(row));
  }
  out.document = format == OutputFormat::Text ? detail::render_text(header, cells)
                                              : detail::render_csv(header, cells);
  return out;
}

// ------------------------------------------------------------- simulate

struct SimulationRequest {
  double alpha = 1.0;
  std::vector<double> betas{1.5, 2.5, 5.0, 10.0};
  std::vector<std::size_t> sizes{10, 25, 50, 75, 100};
  std::vector<double> taus = default_tau_grid();
  std::size_t replications = 1000;
  int contamination = 1;
  std::uint64_t seed = 20240101;
  std::size_t workers = 0;
};

inline std::vector<Estimator> estimators_for(const std::vector<double>& taus) {
  std::vector<Estimator> e;
  for (double t : taus) e.push_back(DpdEstimator{Tau(t).value()});
  e.push_back(CompetitorMethod::RM);
  e.push_back(CompetitorMethod::SM);
  e.push_back(CompetitorMethod::HL);
  return e;
}

// One table per (beta, n) scenario. Text and CSV precede each table with a
// '#' comment line naming the scenario.
inline CommandOutput run_simulate(const SimulationRequest& req, OutputFormat format) {
  if (req.betas.empty() || req.sizes.empty()) throw DomainError("simulate: empty beta or n list");
  const CaseId id = case_from_int(req.contamination);
  std::vector<ScenarioSpec> specs;
  for (double beta : req.betas) {
    for (std::size_t n : req.sizes) {
      ScenarioSpec spec;
      spec.truth = Params(req.alpha, beta);
      spec.n = n;
      spec.replications = req.replications;
      spec.contamination = id;
      spec.estimators = estimators_for(req.taus);
      spec.seed = req.seed;
      spec.workers = req.workers;
      validate(spec);
      specs.push_back(spec);
    }
  }
  CommandOutput out;
  nlohmann::json doc = nlohmann::json::array();
  std::ostringstream text;
  for (const ScenarioSpec& spec : specs) {
    const std::vector<MetricsRow> rows = replicate_metrics(spec);
    if (format == OutputFormat::Json) {
      doc.push_back({{"alpha", spec.truth.alpha()},
                     {"beta", spec.truth.beta()},
                     {"n", spec.n},
                     {"case", static_cast<int>(spec.contamination)},
                     {"replications", spec.replications},
                     {"seed", spec.seed},
                     {"rows", metrics_to_json(rows)}});
      continue;
    }
    if (text.tellp() > 0) text << '\n';
    text << "# alpha=" << detail::fmt("%g", spec.truth.alpha()) << " beta=" << detail::fmt("%g", spec.truth.beta())
         << " n=" << spec.n << " case=" << static_cast<int>(spec.contamination)
         << " replications=" << spec.replications << " seed=" << spec.seed << '\n';
    text << emit_table(rows, format);
  }
  out.document = format == OutputFormat::Json ? doc.dump(2) + "\n" : text.str();
  return out;
}

}  // namespace lldpd
