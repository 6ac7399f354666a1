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

#include <cmath>
#include <cstddef>
#include <limits>

namespace gaplab {

/*!
  Neumaier's variant of Kahan summation.

  Each addition is split with an error-free TwoSum so the rounding error of
  the running sum is carried in `compensation`. Unlike plain Kahan, this stays
  exact when a summand is larger in magnitude than the running sum, which
  happens in the oscillating zero sums.

  The accumulator also tracks the count and the sum of magnitudes, from which
  `error_bound()` reports a rigorous bound on |value() - exact sum of the
  summands as given|.
*/
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      compensation_ += (sum_ - t) + v;
    } else {
      compensation_ += (v - t) + sum_;
    }
    sum_ = t;
    abs_sum_ += std::fabs(v);
    ++count_;
  }

  CompensatedSum& operator+=(double v) {
    add(v);
    return *this;
  }

  /// Folds another accumulator in; the result does not depend on how the
  /// summands were split between the two.
  void merge(const CompensatedSum& other) {
    add(other.sum_);
    compensation_ += other.compensation_;
    abs_sum_ += other.abs_sum_ - std::fabs(other.sum_);
    count_ += other.count_ - 1;
  }

  double value() const { return sum_ + compensation_; }
  std::size_t count() const { return count_; }
  double abs_sum() const { return abs_sum_; }

  /// Neumaier bound: |err| <= 2u|S| + 2 n^2 u^2 sum|x_i|.
  double error_bound() const {
    constexpr double u = std::numeric_limits<double>::epsilon() / 2;
    const double n = static_cast<double>(count_);
    return 2 * u * std::fabs(value()) + 2 * n * n * u * u * abs_sum_;
  }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
  double abs_sum_ = 0.0;
  std::size_t count_ = 0;
};

}  // namespace gaplab
