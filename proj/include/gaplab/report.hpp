// Copyright 2026 The gaplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Run reports and RFC 4180 CSV, the single machine-readable output format.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gaplab/core.hpp"

namespace gaplab {

enum class Verdict { pass, fail, not_applicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "n/a";
  }
  return "?";
}

/// Value to reproduce and the allowed absolute deviation.
struct Expectation {
  double value = 0;
  double tolerance = 0;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> outputs;
  std::optional<Expectation> expectation;
  std::optional<double> observed;  ///< compared against expectation
  Verdict verdict = Verdict::not_applicable;
  std::string note;

  /// Sets observed and derives the verdict from the expectation.
  void judge(double value) {
    observed = value;
    if (!expectation) {
      verdict = Verdict::not_applicable;
      return;
    }
    verdict = std::fabs(value - expectation->value) <= expectation->tolerance ? Verdict::pass
                                                                              : Verdict::fail;
  }
};

/// Shortest round-trip decimal form.
inline std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

/// %.*g with the given significant digits.
inline std::string format_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

using CsvRow = std::vector<std::string>;

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline void write_csv_row(std::ostream& out, const CsvRow& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(row[i]);
  }
  out << "\r\n";
}

/// Parses RFC 4180 CSV; quoted fields may contain separators, quotes and
/// line breaks. Accepts CRLF or LF record ends.
inline std::vector<CsvRow> read_csv(std::istream& in) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  bool quoted = false, field_started = false;
  std::size_t line = 1;
  char c;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
  };
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started) throw ParseError(line, "quote inside unquoted CSV field");
        quoted = true;
        field_started = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (in.peek() == '\n') in.get(c);
        [[fallthrough]];
      case '\n':
        end_row();
        ++line;
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (quoted) throw ParseError(line, "unterminated quoted CSV field");
  if (field_started || !row.empty()) end_row();
  return rows;
}

inline CsvRow report_csv_header() {
  return {"command", "inputs", "outputs", "expected", "tolerance", "observed", "verdict", "note"};
}

inline std::string join_pairs(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string s;
  for (const auto& [k, v] : kv) {
    if (!s.empty()) s += ';';
    s += k + '=' + v;
  }
  return s;
}

inline CsvRow to_csv_row(const RunReport& r) {
  return {r.command,
          join_pairs(r.inputs),
          join_pairs(r.outputs),
          r.expectation ? format_double(r.expectation->value) : "",
          r.expectation ? format_double(r.expectation->tolerance) : "",
          r.observed ? format_double(*r.observed) : "",
          to_string(r.verdict),
          r.note};
}

}  // namespace gaplab
