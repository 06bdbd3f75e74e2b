#pragma once

// Text emitters shared by the command-line front end: 12 significant digits
// everywhere, "%.11e" in machine formats and "%.12g" in markdown.

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kratzer/errors.hpp"

namespace kratzer::fmt {

enum class Format { csv, json, markdown };

inline Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  if (s == "markdown" || s == "md") return Format::markdown;
  throw InputError("unknown format '" + s + "'", "format");
}

inline std::string sci(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return buf;
}

inline std::string plain(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string short_sci(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

/// The value rounded to 12 significant digits, for JSON number fields.
inline double rounded(double x) { return std::strtod(sci(x).c_str(), nullptr); }

inline nlohmann::json json_number(std::optional<double> x) {
  return x ? nlohmann::json(rounded(*x)) : nlohmann::json(nullptr);
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
  os << '\n';
}

inline void markdown_row(std::ostream& os, const std::vector<std::string>& cells) {
  os << '|';
  for (const auto& c : cells) os << ' ' << c << " |";
  os << '\n';
}

inline void markdown_header(std::ostream& os, const std::vector<std::string>& cells) {
  markdown_row(os, cells);
  os << '|';
  for (std::size_t i = 0; i < cells.size(); ++i) os << "---|";
  os << '\n';
}

}  // namespace kratzer::fmt
