// Copyright 2026 The susy-ncs Authors
// SPDX-License-Identifier: Apache-2.0

// CSV / JSON serialization of scan tables.

#pragma once

#include <susy_ncs/scan.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace susy::cli {

enum class Format { Csv, Json };

/// %.17g round-trips every double.
inline std::string format_number(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_csv(std::ostream& os, const ScanTable& table) {
  for (const auto& c : table.columns) os << c << ',';
  os << "error\n";
  for (const auto& row : table.rows) {
    for (double v : row.values) os << format_number(v) << ',';
    os << csv_escape(row.error) << '\n';
  }
}

inline nlohmann::ordered_json to_json(const ScanTable& table) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      const double v = i < row.values.size() ? row.values[i] : std::nan("");
      if (std::isnan(v)) {
        obj[table.columns[i]] = nullptr;
      } else {
        obj[table.columns[i]] = v;
      }
    }
    obj["error"] = row.error;
    rows.push_back(std::move(obj));
  }
  return rows;
}

inline void write_table(std::ostream& os, const ScanTable& table, Format format) {
  if (format == Format::Csv) {
    write_csv(os, table);
  } else {
    os << to_json(table).dump(2) << '\n';
  }
}

}  // namespace susy::cli
