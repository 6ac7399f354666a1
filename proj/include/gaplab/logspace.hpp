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

#include <algorithm>
#include <cmath>
#include <compare>
#include <limits>

#include "gaplab/core.hpp"

namespace gaplab {

/// A nonnegative real stored as its natural logarithm.
///
/// Quantities such as x = e^60, x^U with U ~ x, or e^{8e14} are carried
/// without overflow or underflow; zero is log = -inf.
class LogReal {
 public:
  constexpr LogReal() = default;

  static constexpr LogReal from_log(double log_value) {
    LogReal r;
    r.log_ = log_value;
    return r;
  }
  static LogReal from_value(double v) {
    if (v < 0) throw DomainError("LogReal holds nonnegative values only");
    return from_log(std::log(v));
  }
  static constexpr LogReal zero() {
    return from_log(-std::numeric_limits<double>::infinity());
  }
  static constexpr LogReal one() { return from_log(0.0); }

  constexpr double log() const { return log_; }
  double value() const { return std::exp(log_); }
  bool is_zero() const { return std::isinf(log_) && log_ < 0; }

  friend LogReal operator*(LogReal a, LogReal b) { return from_log(a.log_ + b.log_); }
  friend LogReal operator/(LogReal a, LogReal b) { return from_log(a.log_ - b.log_); }
  friend LogReal operator*(LogReal a, double b) { return a * from_value(b); }
  friend LogReal operator*(double a, LogReal b) { return from_value(a) * b; }
  friend LogReal operator/(LogReal a, double b) { return a / from_value(b); }

  friend LogReal operator+(LogReal a, LogReal b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const double hi = std::max(a.log_, b.log_);
    const double lo = std::min(a.log_, b.log_);
    return from_log(hi + std::log1p(std::exp(lo - hi)));
  }
  LogReal& operator+=(LogReal b) { return *this = *this + b; }

  /// a - b for a >= b.
  friend LogReal operator-(LogReal a, LogReal b) {
    if (b.is_zero()) return a;
    if (b.log_ > a.log_) throw DomainError("LogReal subtraction would go negative");
    if (b.log_ == a.log_) return zero();
    return from_log(a.log_ + std::log1p(-std::exp(b.log_ - a.log_)));
  }

  LogReal pow(double p) const {
    if (is_zero()) return p == 0 ? one() : zero();
    return from_log(log_ * p);
  }

  /// log of the represented value, as a LogReal (requires value >= 1).
  LogReal log_of() const {
    if (log_ < 0) throw DomainError("log of a value below 1");
    return from_value(log_);
  }

  friend std::partial_ordering operator<=>(LogReal a, LogReal b) { return a.log_ <=> b.log_; }
  friend bool operator==(LogReal a, LogReal b) { return a.log_ == b.log_; }

 private:
  double log_ = -std::numeric_limits<double>::infinity();
};

}  // namespace gaplab
