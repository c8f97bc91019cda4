#pragma once

// Text ingestion of positive samples and the bundled flood series.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lldpd/errors.hpp"
#include "lldpd/loglogistic.hpp"

namespace lldpd {

// Annual maximum flood series (31 years).
inline const std::vector<double>& flood_scotland_values() {
  static const std::vector<double> v{89.8,  109.1, 202.2, 146.3, 212.3, 116.7, 109.1, 80.7,
                                     127.4, 138.8, 283.5, 85.6,  105.5, 118,   387.8, 80.7,
                                     165.7, 111.6, 134.4, 131.5, 102,   104.3, 242.5, 214.8,
                                     144.6, 114.2, 98.3,  102.8, 104.3, 196.2, 143.7};
  return v;
}

inline constexpr double kFloodOutlier = 387.8;

// Builtin datasets: the series as published, with its largest value dropped,
// and with that value multiplied by five.
inline std::vector<std::string> builtin_names() {
  return {"flood-scotland", "flood-scotland-no-outlier", "flood-scotland-extreme"};
}

inline Sample builtin_dataset(std::string_view name) {
  std::vector<double> v = flood_scotland_values();
  if (name == "flood-scotland") return Sample(v);
  if (name == "flood-scotland-no-outlier") {
    v.erase(std::find(v.begin(), v.end(), kFloodOutlier));
    return Sample(v);
  }
  if (name == "flood-scotland-extreme") {
    *std::find(v.begin(), v.end(), kFloodOutlier) = 5.0 * kFloodOutlier;
    return Sample(v);
  }
  throw DomainError("unknown builtin dataset '" + std::string(name) + "'");
}

namespace detail {

inline bool is_separator(char c) {
  return c == ',' || c == ';' || c == ' ' || c == '\t' || c == '\r';
}

}  // namespace detail

// One or more values per line, separated by commas, semicolons or
// whitespace. Blank lines and lines whose first non-blank character is '#'
// are skipped.
inline Sample parse_sample(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && detail::is_separator(line[i])) ++i;
      if (i == line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !detail::is_separator(line[j])) ++j;
      const std::string_view tok(line.data() + i, j - i);
      double v = 0.0;
      const char* begin = tok.data();
      if (*begin == '+') ++begin;
      const auto [end, ec] = std::from_chars(begin, tok.data() + tok.size(), v);
      if (ec != std::errc() || end != tok.data() + tok.size() || !std::isfinite(v)) {
        throw ParseError("line " + std::to_string(lineno) + ": not a number: '" + std::string(tok) + "'",
                         lineno);
      }
      if (!(v > 0.0)) {
        throw DataDomainError("line " + std::to_string(lineno) + ": value must be > 0, got " +
                                  std::string(tok),
                              lineno);
      }
      values.push_back(v);
      i = j;
    }
  }
  if (values.empty()) throw ParseError("no data values found", lineno);
  return Sample(std::move(values));
}

inline Sample parse_sample(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_sample(in);
}

inline Sample ingest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return parse_sample(in);
}

// A builtin name wins over a file of the same name.
inline Sample ingest(const std::string& path_or_builtin) {
  const auto names = builtin_names();
  if (std::find(names.begin(), names.end(), path_or_builtin) != names.end()) {
    return builtin_dataset(path_or_builtin);
  }
  return ingest_file(path_or_builtin);
}

}  // namespace lldpd
