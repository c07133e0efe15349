#pragma once

#include <algorithm>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "sjk/io/json.hpp"

namespace sjk::io {

enum class Format { json, csv, table };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "table") return Format::table;
  throw ValidationError("unknown format '" + s + "' (json|csv|table)");
}

/// Keys of all records in order of first appearance.
inline std::vector<std::string> columns_of(const std::vector<Json>& records) {
  std::vector<std::string> cols;
  for (const auto& r : records) {
    for (const auto& [k, v] : r.items()) {
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    }
  }
  return cols;
}

inline std::string cell_text(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// "[lo, hi]" with rational bounds becomes decimals plus the exact pair.
inline std::string table_text(const std::string& s) {
  static const std::regex interval(R"(^\[(-?\d+(?:/\d+)?), (-?\d+(?:/\d+)?)\]$)");
  std::smatch m;
  if (!std::regex_match(s, m, interval)) return s;
  const BigRational lo = BigRational::parse(m[1].str()), hi = BigRational::parse(m[2].str());
  return "[" + lo.decimal(6) + "..., " + hi.decimal(6, true) + "...] = " + s;
}

inline std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

inline std::string render(const std::vector<Json>& records, Format format, std::vector<std::string> columns = {}) {
  std::ostringstream os;
  if (format == Format::json) {
    for (const auto& r : records) os << r.dump() << '\n';
    return os.str();
  }
  if (columns.empty()) columns = columns_of(records);
  std::vector<std::vector<std::string>> rows;
  rows.reserve(records.size());
  for (const auto& r : records) {
    std::vector<std::string> row;
    for (const auto& c : columns) {
      std::string t = r.contains(c) ? cell_text(r.at(c)) : "";
      row.push_back(format == Format::table ? table_text(t) : t);
    }
    rows.push_back(std::move(row));
  }
  if (format == Format::csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_quote(cells[i]);
      os << "\r\n";
    };
    line(columns);
    for (const auto& r : rows) line(r);
    return os.str();
  }
  std::vector<std::size_t> width(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    width[i] = display_width(columns[i]);
    for (const auto& r : rows) width[i] = std::max(width[i], display_width(r[i]));
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s.append(width[i] - display_width(cells[i]), ' ');
    }
    os << s << '\n';
  };
  line(columns);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : rows) line(r);
  return os.str();
}

}  // namespace sjk::io
