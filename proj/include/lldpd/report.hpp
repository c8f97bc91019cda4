#pragma once

// Rendering of simulation metrics. Text uses 5 decimals, CSV and JSON keep
// full double precision (17 significant digits), so CSV round-trips exactly.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lldpd/errors.hpp"
#include "lldpd/simulation.hpp"

namespace lldpd {

enum class OutputFormat { Text, Csv, Json };

inline OutputFormat format_from_string(std::string_view s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw DomainError("unknown output format '" + std::string(s) + "' (text, csv, json)");
}

namespace detail {

inline std::string fixed5(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  return buf;
}

inline std::string full(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// JSON has no NaN; failed aggregates become null.
inline nlohmann::json json_number(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

inline double number_from_json(const nlohmann::json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

}  // namespace detail

inline const std::vector<std::string>& metrics_columns() {
  static const std::vector<std::string> c{"estimator", "bias", "rmse", "alpha_hat", "beta_hat", "n_failed"};
  return c;
}

inline nlohmann::json metrics_to_json(const std::vector<MetricsRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const MetricsRow& r : rows) {
    out.push_back({{"estimator", r.estimator},
                   {"bias", detail::json_number(r.mean_bias)},
                   {"rmse", detail::json_number(r.rmse)},
                   {"alpha_hat", detail::json_number(r.mean_alpha_hat)},
                   {"beta_hat", detail::json_number(r.mean_beta_hat)},
                   {"n_failed", r.n_failed}});
  }
  return out;
}

inline std::vector<MetricsRow> metrics_from_json(const nlohmann::json& doc) {
  std::vector<MetricsRow> rows;
  for (const auto& j : doc) {
    rows.push_back({j.at("estimator").get<std::string>(), detail::number_from_json(j.at("bias")),
                    detail::number_from_json(j.at("rmse")), detail::number_from_json(j.at("alpha_hat")),
                    detail::number_from_json(j.at("beta_hat")), j.at("n_failed").get<std::size_t>()});
  }
  return rows;
}

inline std::string emit_table(const std::vector<MetricsRow>& rows, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Text: {
      std::size_t w0 = 9;
      for (const MetricsRow& r : rows) w0 = std::max(w0, r.estimator.size());
      out << std::string(metrics_columns()[0]) << std::string(w0 - 9, ' ');
      for (std::size_t c = 1; c < 5; ++c) out << "  " << detail::pad(metrics_columns()[c], 11);
      out << "  " << detail::pad("n_failed", 8) << '\n';
      for (const MetricsRow& r : rows) {
        out << r.estimator << std::string(w0 - r.estimator.size(), ' ');
        for (double v : {r.mean_bias, r.rmse, r.mean_alpha_hat, r.mean_beta_hat}) {
          out << "  " << detail::pad(detail::fixed5(v), 11);
        }
        out << "  " << detail::pad(std::to_string(r.n_failed), 8) << '\n';
      }
      break;
    }
    case OutputFormat::Csv: {
      const auto& c = metrics_columns();
      out << c[0] << ',' << c[1] << ',' << c[2] << ',' << c[3] << ',' << c[4] << ',' << c[5] << '\n';
      for (const MetricsRow& r : rows) {
        out << r.estimator << ',' << detail::full(r.mean_bias) << ',' << detail::full(r.rmse) << ','
            << detail::full(r.mean_alpha_hat) << ',' << detail::full(r.mean_beta_hat) << ','
            << r.n_failed << '\n';
      }
      break;
    }
    case OutputFormat::Json:
      out << metrics_to_json(rows).dump(2) << '\n';
      break;
  }
  return out.str();
}

// Reads the CSV rendering of emit_table back.
inline std::vector<MetricsRow> parse_metrics_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::vector<MetricsRow> rows;
  auto number = [&](const std::string& tok) {
    if (tok == "nan") return std::numeric_limits<double>::quiet_NaN();
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.empty()) {
      throw ParseError("line " + std::to_string(lineno) + ": not a number: '" + tok + "'", lineno);
    }
    return v;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::istringstream ls(line);
    for (std::string tok; std::getline(ls, tok, ',');) f.push_back(tok);
    if (f.size() != 6) {
      throw ParseError("line " + std::to_string(lineno) + ": expected 6 fields", lineno);
    }
    if (f[0] == metrics_columns()[0]) continue;  // header
    const double failed = number(f[5]);
    if (!(failed >= 0.0) || failed != std::floor(failed)) {
      throw ParseError("line " + std::to_string(lineno) + ": n_failed must be a count", lineno);
    }
    rows.push_back({f[0], number(f[1]), number(f[2]), number(f[3]), number(f[4]),
                    static_cast<std::size_t>(failed)});
  }
  return rows;
}

}  // namespace lldpd
