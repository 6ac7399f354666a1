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

// The explicit formula for psi(x) over a table of zeros, plus the closed-form
// bounds that make its truncation error explicit.
//
//   psi(x) = x - sum_rho x^rho / rho - log 2pi - 1/2 log(1 - x^-2)
//
// Zeros are taken as rho = 1/2 + i gamma. Each conjugate pair contributes the
// real number 2 Re(x^rho / rho).

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "gaplab/arith.hpp"
#include "gaplab/core.hpp"
#include "gaplab/logspace.hpp"
#include "gaplab/summation.hpp"
#include "gaplab/zeros.hpp"

namespace gaplab {

/// Truncation heights closer than this to an ordinate are rejected.
inline constexpr double kNearZeroTolerance = 1e-6;

enum class PhaseMode {
  standard,  ///< gamma * log x in double precision
  extended,  ///< log x and the product carried to 50 digits, reduced mod 2pi
};

struct ExplicitFormulaResult {
  double x = 0;
  double T = 0;
  double main_term = 0;      ///< x
  double zero_sum = 0;       ///< sum over |Im rho| < T of x^rho / rho
  double trivial_terms = 0;  ///< -log 2pi - 1/2 log(1 - x^-2)
  double psi_estimate = 0;   ///< main_term - zero_sum + trivial_terms
  double error_bound = 0;    ///< 2 x log^2 x / T
  std::size_t zeros_used = 0;
};

/// 2 Re(x^rho / rho) for rho = 1/2 + i gamma, given log x.
inline double paired_zero_term(double log_x, double gamma) {
  const double phase = gamma * log_x;
  const double amp = std::exp(0.5 * log_x);
  return 2 * amp * (0.5 * std::cos(phase) + gamma * std::sin(phase)) / (0.25 + gamma * gamma);
}

namespace detail {

using Float50 = boost::multiprecision::cpp_bin_float_50;

inline void reduced_phase(const Float50& log_x, double gamma, double& c, double& s) {
  static const Float50 two_pi = 2 * boost::math::constants::pi<Float50>();
  Float50 phase = log_x * gamma;
  phase -= two_pi * floor(phase / two_pi);
  const double p = static_cast<double>(phase);
  c = std::cos(p);
  s = std::sin(p);
}

inline void check_truncation(const ZeroTable& table, double T) {
  if (!table.anchored_at_zero()) {
    throw NotAnchored("explicit formula needs every zero below T");
  }
  if (T > table.height()) throw HeightExceeded("T above table height");
  const auto ords = table.ordinates();
  const auto it = std::lower_bound(ords.begin(), ords.end(), T);
  const bool near_above = it != ords.end() && *it - T < kNearZeroTolerance;
  const bool near_below = it != ords.begin() && T - *(it - 1) < kNearZeroTolerance;
  if (near_above || near_below) {
    throw NearZeroOrdinate("T is within 1e-6 of a zero ordinate");
  }
}

}  // namespace detail

/// Sum of x^rho/rho over the zeros 0 < gamma < T, paired with conjugates, in
/// the given order of ordinates.
inline double zero_sum(double x, std::span<const double> gammas,
                       PhaseMode mode = PhaseMode::standard) {
  const double log_x = std::log(x);
  const double amp = std::sqrt(x);
  CompensatedSum sum;
  if (mode == PhaseMode::standard) {
    for (double g : gammas) sum.add(paired_zero_term(log_x, g));
  } else {
    const detail::Float50 log_x_hp = log(detail::Float50(x));
    for (double g : gammas) {
      double c = 0, s = 0;
      detail::reduced_phase(log_x_hp, g, c, s);
      sum.add(2 * amp * (0.5 * c + g * s) / (0.25 + g * g));
    }
  }
  return sum.value();
}

/// -log 2pi - 1/2 log(1 - x^-2)
inline double trivial_terms(double x) {
  return -kLog2Pi - 0.5 * std::log1p(-1 / (x * x));
}

/// Truncated explicit formula with the error bound 2 x log^2 x / T.
inline ExplicitFormulaResult truncated_psi(double x, double T, const ZeroTable& table,
                                           PhaseMode mode = PhaseMode::standard) {
  if (!(x > 1)) throw DomainError("truncated_psi needs x > 1");
  if (!(T > 0)) throw DomainError("truncated_psi needs T > 0");
  detail::check_truncation(table, T);
  const auto gammas = table.below(T);
  ExplicitFormulaResult r;
  r.x = x;
  r.T = T;
  r.main_term = x;
  r.zero_sum = zero_sum(x, gammas, mode);
  r.trivial_terms = trivial_terms(x);
  r.psi_estimate = r.main_term - r.zero_sum + r.trivial_terms;
  const double lx = std::log(x);
  r.error_bound = 2 * x * lx * lx / T;
  r.zeros_used = gammas.size();
  return r;
}

inline bool is_half_odd_integer(double x) {
  const double twice = 2 * x;
  return std::floor(twice) == twice && std::fmod(twice, 2.0) == 1.0;
}

struct ConvergencePoint {
  double T = 0;
  double psi_estimate = 0;
  double deviation = 0;  ///< |psi_estimate - psi(x)|
};

/// Deviation of the truncated sum from the sieve value of psi(x) at each
/// height of an ascending grid.
inline std::vector<ConvergencePoint> untruncated_convergence(double x, const ZeroTable& table,
                                                             std::span<const double> T_grid,
                                                             const SieveConfig& cfg = {}) {
  if (!(x >= 2.5) || !is_half_odd_integer(x)) {
    throw DomainError("convergence harness needs x half an odd integer >= 2.5");
  }
  if (!std::is_sorted(T_grid.begin(), T_grid.end())) {
    throw DomainError("T grid must be ascending");
  }
  const double exact = psi(x, cfg);
  std::vector<ConvergencePoint> out;
  out.reserve(T_grid.size());
  for (double T : T_grid) {
    const auto r = truncated_psi(x, T, table);
    out.push_back({T, r.psi_estimate, std::fabs(r.psi_estimate - exact)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bound on sum_n Lambda(n) (x/n)^c |log(x/n)|^-1 by the five-way split.
// ---------------------------------------------------------------------------

struct BigSumBound {
  double alpha = 0;
  double x_log = 0;  ///< log x
  double c = 0;      ///< 1 + 1/log x
  // Each component divided by x log^2 x.
  double s1_s5 = 0;
  double s3 = 0;
  double s2 = 0;
  double s4 = 0;
  double total = 0;
  double ratio = 0;  ///< total / (x log^2 x); equals `total` in these units
  bool corrected_s4 = false;
  bool in_asymptotic_domain = false;  ///< x >= e^60

  /// Absolute size of the bound.
  LogReal total_value() const {
    return LogReal::from_log(x_log) * LogReal::from_value(x_log * x_log) *
           LogReal::from_value(total);
  }
};

/// Evaluates the split S1 + S5, S3, S2, S4 for x = e^x_log and alpha in (1, 2).
/// With corrected_s4 the S4 bound carries the factor x it needs to scale like
/// the other terms; otherwise the printed form is used verbatim.
inline BigSumBound big_sum_bound(double alpha, double x_log, bool corrected_s4) {
  if (!(alpha > 1 && alpha < 2)) throw DomainError("big_sum_bound needs alpha in (1, 2)");
  if (!(x_log > 1)) throw DomainError("big_sum_bound needs x > e");
  BigSumBound b;
  b.alpha = alpha;
  b.x_log = x_log;
  b.c = 1 + 1 / x_log;
  b.corrected_s4 = corrected_s4;
  b.in_asymptotic_domain = x_log >= 60;

  const double L = x_log;
  const double log_alpha = std::log(alpha);
  const double alpha_c = std::pow(alpha, b.c);
  const double inv_x = std::exp(-L);

  // S1 + S5 < e x log x / log alpha
  b.s1_s5 = kE / (log_alpha * L);
  // S3 < 5 x log x
  b.s3 = 5 / L;
  // S2 < alpha^c x log x (log(x - x/alpha) + gamma + 1/(x - x/alpha))
  const double one_minus = 1 - 1 / alpha;
  b.s2 = alpha_c * (L + std::log(one_minus) + kEulerGamma + inv_x / one_minus) / L;
  // S4 < 2 log(alpha x)/(3 - alpha) (log(alpha x - x) + gamma + 1/(alpha x - x))
  const double s4_core = 2 * (L + log_alpha) / (3 - alpha) *
                         (L + std::log(alpha - 1) + kEulerGamma + inv_x / (alpha - 1));
  b.s4 = corrected_s4 ? s4_core / (L * L) : s4_core * inv_x / (L * L);

  b.total = b.s1_s5 + b.s3 + b.s2 + b.s4;
  b.ratio = b.total;
  return b;
}

// ---------------------------------------------------------------------------
// Itemized truncation error of the explicit formula.
// ---------------------------------------------------------------------------

/// Every term is carried in log space; x^-U terms are effectively zero.
struct ErrorBudget {
  double x_log = 0;
  double T_log = 0;
  LogReal U;                 ///< even integer closest to x
  LogReal perron_term;       ///< 2.8 x log^2 x / (pi T)
  LogReal i3;                ///< (18 + 2 log sqrt(U^2 + T^2)) / (2 pi x^U)
  LogReal zero_window;       ///< 2 x log T / (T - 1)
  LogReal i5;                ///< (18 + 2 log sqrt(U^2 + (T+1)^2)) / (2 pi x^U T)
  LogReal i6;                ///< (9 + log sqrt(U^2 + (T+1)^2)) / (2 pi x (T - 1))
  LogReal i7;                ///< e / (2 pi (T - 1)) (log^2(T+1) + log(T+1))
  LogReal i8;                ///< e x log x / (pi (T - 1))
  double trivial_const = 0;  ///< zeta'(0)/zeta(0) = log 2pi
  double log_term = 0;       ///< 1/2 log(1 - x^-2), <= 0
  LogReal total;
  LogReal target_bound;     ///< 2 x log^2 x / T
  double ratio = 0;          ///< total / target_bound
};

namespace detail {
// log(e^a - 1) for a > 0
inline double log_expm1(double a) { return a > 30 ? a + std::log1p(-std::exp(-a)) : std::log(std::expm1(a)); }
// log(e^a + 1)
inline double log_exp1p(double a) { return a > 30 ? a + std::log1p(std::exp(-a)) : std::log1p(std::exp(a)); }
}  // namespace detail

/// Error budget for x = e^x_log and T = e^T_log with 50 < T < x.
inline ErrorBudget error_budget(double x_log, double T_log) {
  if (!(x_log > 0)) throw DomainError("error_budget needs x > 1");
  if (!(T_log > std::log(50.0)) || !(T_log < x_log)) {
    throw DomainError("error_budget needs T in (50, x)");
  }
  using R = LogReal;
  ErrorBudget e;
  e.x_log = x_log;
  e.T_log = T_log;

  const R x = R::from_log(x_log);
  const R T = R::from_log(T_log);
  const R logx = R::from_value(x_log);
  const R T_minus_1 = R::from_log(detail::log_expm1(T_log));
  const R T_plus_1 = R::from_log(detail::log_exp1p(T_log));
  const double log_T_plus_1 = T_plus_1.log();

  // The even integer nearest x differs from x by at most 1; for x > e^60 the
  // relative change is far below double resolution.
  double U_value = 2 * std::round(std::exp(x_log) / 2);
  e.U = x_log < 700 ? R::from_value(U_value) : x;
  if (e.U.is_zero()) e.U = R::from_value(2);
  const double log_U = e.U.log();
  // -U log x, the log of x^-U
  const double log_x_neg_U = -std::exp(log_U) * x_log;

  auto log_hypot = [](double log_a, double log_b) {
    // log sqrt(a^2 + b^2)
    const double hi = std::max(log_a, log_b), lo = std::min(log_a, log_b);
    return hi + 0.5 * std::log1p(std::exp(2 * (lo - hi)));
  };
  const double lh_T = log_hypot(log_U, T_log);
  const double lh_T1 = log_hypot(log_U, log_T_plus_1);

  e.perron_term = 2.8 * x * logx * logx / (R::from_value(kPi) * T);
  e.i3 = R::from_value(18 + 2 * lh_T) / R::from_value(2 * kPi) * R::from_log(log_x_neg_U);
  e.zero_window = 2 * x * R::from_value(T_log) / T_minus_1;
  e.i5 = R::from_value(18 + 2 * lh_T1) / (R::from_value(2 * kPi) * T) * R::from_log(log_x_neg_U);
  e.i6 = R::from_value(9 + lh_T1) / (R::from_value(2 * kPi) * x * T_minus_1);
  e.i7 = R::from_value(kE / (2 * kPi)) / T_minus_1 *
         R::from_value(log_T_plus_1 * log_T_plus_1 + log_T_plus_1);
  e.i8 = R::from_value(kE / kPi) * x * logx / T_minus_1;
  e.trivial_const = kLog2Pi;
  e.log_term = 0.5 * std::log1p(-std::exp(-2 * x_log));

  const R window_sum = e.zero_window + e.i5 + e.i6 + e.i7 + e.i8;
  e.total = R::from_value(e.trivial_const) + R::from_value(std::fabs(e.log_term)) +
            R::from_value(2) * window_sum + e.i3 + e.perron_term;
  e.target_bound = R::from_value(2) * x * logx * logx / T;
  e.ratio = (e.total / e.target_bound).value();
  return e;
}

}  // namespace gaplab
