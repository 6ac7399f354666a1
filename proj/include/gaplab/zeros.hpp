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

// Tables of ordinates gamma > 0 of nontrivial zeta zeros, all taken on the
// critical line.
//
// File format: text, one decimal ordinate per line, strictly ascending.
// Lines whose first non-blank character is '#' are comments; blank lines and
// surrounding whitespace are ignored (Odlyzko's tables pad with spaces).

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gaplab/core.hpp"

namespace gaplab {

/// Ordinate of the first nontrivial zero.
inline constexpr double kFirstZeroOrdinate = 14.134725141734693;

class ZeroTable {
 public:
  ZeroTable() = default;
  /// Takes already-validated ordinates. A table is anchored at height 0 when
  /// its first ordinate is the first zeta zero.
  ZeroTable(std::vector<double> ordinates, std::string source_label)
      : ordinates_(std::move(ordinates)), source_label_(std::move(source_label)) {
    anchored_at_zero_ =
        !ordinates_.empty() && std::fabs(ordinates_.front() - kFirstZeroOrdinate) < 1e-5;
  }

  std::span<const double> ordinates() const { return ordinates_; }
  const std::string& source_label() const { return source_label_; }
  bool anchored_at_zero() const { return anchored_at_zero_; }
  std::size_t size() const { return ordinates_.size(); }
  bool empty() const { return ordinates_.empty(); }
  double height() const { return ordinates_.empty() ? 0.0 : ordinates_.back(); }

  /// Ordinates strictly below T.
  std::span<const double> below(double T) const {
    const auto end = std::lower_bound(ordinates_.begin(), ordinates_.end(), T);
    return {ordinates_.data(), static_cast<std::size_t>(end - ordinates_.begin())};
  }

 private:
  std::vector<double> ordinates_;
  std::string source_label_;
  bool anchored_at_zero_ = false;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\f\v");
  return s.substr(first, last - first + 1);
}

}  // namespace detail

/// Parses a zero table; rejects malformed, non-positive, duplicated or
/// descending entries with the offending line number.
inline ZeroTable load_zeros(std::istream& in, std::string source_label = "stream") {
  std::vector<double> ordinates;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = detail::trim(line);
    if (text.empty() || text.front() == '#') continue;
    double v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw ParseError(line_no, "not a decimal ordinate: '" + std::string(text) + "'");
    }
    if (!std::isfinite(v) || v <= 0) {
      throw ParseError(line_no, "ordinate must be positive and finite");
    }
    if (!ordinates.empty() && v <= ordinates.back()) {
      throw OrderError(line_no, v == ordinates.back() ? "duplicated ordinate"
                                                      : "ordinates not ascending");
    }
    ordinates.push_back(v);
  }
  if (ordinates.empty()) throw ParseError(line_no, "no ordinates in table");
  return ZeroTable(std::move(ordinates), std::move(source_label));
}

inline ZeroTable load_zeros_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open zero table '" + path + "'");
  return load_zeros(in, path);
}

/// Writes the table in the same format load_zeros reads, at full precision.
inline void serialize(const ZeroTable& table, std::ostream& out) {
  out << "# " << table.source_label() << "\n";
  char buf[64];
  for (double g : table.ordinates()) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, g);
    (void)ec;
    out.write(buf, ptr - buf);
    out.put('\n');
  }
}

/// N(T): number of ordinates <= T. Requires a table anchored at height 0.
inline std::size_t count_zeros(const ZeroTable& table, double T) {
  if (!table.anchored_at_zero()) {
    throw NotAnchored("count_zeros needs a table starting at the first zero");
  }
  if (T > table.height()) throw HeightExceeded("T above table height");
  const auto ords = table.ordinates();
  return static_cast<std::size_t>(std::upper_bound(ords.begin(), ords.end(), T) - ords.begin());
}

struct WindowCheck {
  double t = 0;
  std::size_t count = 0;  ///< #{gamma : t - 1 < gamma < t + 1}
  double bound = 0;       ///< log t
  bool ok = false;        ///< count < bound
};

/// N(t + 1) - N(t - 1) < log t, for 50 < t <= height - 1.
inline WindowCheck window_count_check(const ZeroTable& table, double t) {
  if (!(t > 50) || t > table.height() - 1) {
    throw DomainError("window_count_check needs 50 < t <= height - 1");
  }
  if (!table.anchored_at_zero()) {
    throw NotAnchored("window_count_check needs a table starting at the first zero");
  }
  const auto ords = table.ordinates();
  const auto lo = std::upper_bound(ords.begin(), ords.end(), t - 1);
  const auto hi = std::lower_bound(ords.begin(), ords.end(), t + 1);
  WindowCheck w;
  w.t = t;
  w.count = hi > lo ? static_cast<std::size_t>(hi - lo) : 0;
  w.bound = std::log(t);
  w.ok = static_cast<double>(w.count) < w.bound;
  return w;
}

}  // namespace gaplab
