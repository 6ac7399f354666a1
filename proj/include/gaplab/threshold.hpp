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

// Threshold solver for primes in (x, x + m x^{1 - 1/m}].
//
// Everything is expressed in y = log x; x itself (around e^{8e14} for cubes)
// is never formed. A prime lies in the interval for every x = e^y with y
// beyond both of
//
//   (1)  log(27A/256) + (L-1-k) log y - 4/(3^{2/3} c) y^{k-2/3} / log^{1/3} y
//            < log(1/2 (1 - eps))
//   (2)  11/4 log y + 3/8 y^k - (3/8 - 1/m) y < log(m/12 (1 - eps))
//
// and then for every n >= n0 with log log n0 = log(y0 / m).

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "gaplab/core.hpp"
#include "gaplab/zeta_bounds.hpp"

namespace gaplab {

/// 30 significant digits; used where inequality (2) cancels.
using Float30 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<30>,
                                              boost::multiprecision::et_off>;

struct ThresholdProblem {
  unsigned m = 3;      ///< power; h = m x^{1 - 1/m}
  double k = 0.9359;   ///< T(x) exponent, strictly inside (2/3, 1)
  BoundParams params;
  double eps = 1e-3;   ///< slack absorbed by the lower-order error E

  void validate() const {
    if (m < 3) throw DomainError("ThresholdProblem: m must be >= 3");
    if (!(k > 2.0 / 3 && k < 1)) throw DomainError("ThresholdProblem: k must lie in (2/3, 1)");
    if (!(eps > 0 && eps < 1)) throw DomainError("ThresholdProblem: eps must lie in (0, 1)");
    params.validate();
  }
};

struct ThresholdSolution {
  double y0 = 0;          ///< threshold in y = log x
  double k_used = 0;
  double loglog_n0 = 0;   ///< log(y0) - log(m)
  double ineq1_root = 0;
  double ineq2_root = 0;
  double ineq1_margin_at_y0 = 0;
  double ineq2_margin_at_y0 = 0;
};

// ---------------------------------------------------------------------------
// T(x) and the bound on the zero sum.
// ---------------------------------------------------------------------------

/// log T for the T solving x / ((3T)^{8/3} log^2 T) = exp(log^k x), i.e.
/// (8/3) log(3T) + 2 log log T = log x - log^k x.
inline double solve_log_T(double x_log, double k) {
  if (!(x_log > 0)) throw DomainError("solve_T needs log x > 0");
  if (!(k > 2.0 / 3 && k < 1)) throw DomainError("solve_T needs k in (2/3, 1)");
  const double rhs = x_log - std::pow(x_log, k);
  if (!(rhs > 8.0 / 3 * std::log(3.0))) {
    throw NoSolution("solve_T: log x - log^k x too small for T > 1");
  }
  // Left side is increasing in u = log T > 0.
  auto f = [&](double u) { return 8.0 / 3 * (std::log(3.0) + u) + 2 * std::log(u) - rhs; };
  double lo = 1e-300, hi = 1.0;
  while (f(hi) < 0) hi *= 2;
  for (int i = 0; i < 400 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// T itself; overflows to inf once log T passes about 709.
inline double solve_T(double x_log, double k) { return std::exp(solve_log_T(x_log, k)); }

/// log of the two terms bounding h^-1 S, the zero sum over the interval.
struct ZeroSumBound {
  double term1_log = 0;  ///< log[log^{1/4} x e^{-(3/8) log^k x} / (3^{3/4} 8^{1/4} pi)]
  double term2_log = 0;  ///< log[(27A/256) log^{L-1-k} x exp(-4/(3^{2/3} c) ...)]
};

inline ZeroSumBound zero_sum_bound(double x_log, double k, const BoundParams& params = {}) {
  if (!(x_log > kE)) throw DomainError("zero_sum_bound needs log x > e");
  if (!(k > 2.0 / 3 && k < 1)) throw DomainError("zero_sum_bound needs k in (2/3, 1)");
  params.validate();
  const double ly = std::log(x_log);
  ZeroSumBound b;
  b.term1_log = 0.25 * ly - 0.375 * std::pow(x_log, k) -
                std::log(std::pow(3.0, 0.75) * std::pow(8.0, 0.25) * kPi);
  b.term2_log = std::log(27 * params.A / 256) + (params.L - 1 - k) * ly -
                4 / (std::cbrt(9.0) * params.c_ford) * std::pow(x_log, k - 2.0 / 3) / std::cbrt(ly);
  return b;
}

/// Tests whether the term (927A/32) log^2 x (e^{-nu(T) log x} - x^{-3/8}) is
/// dominated by the dropped (27A/256) log^{4-k} x e^{-(3/8) log^k x}, with
/// T = T(x) and nu from the zero-free region.
struct DominanceCheck {
  double T_log = 0;
  double nu = 0;
  double dropped_log = 0;  ///< log (27A/256) log^{4-k} x e^{-(3/8) log^k x}
  double added_log = 0;    ///< log (927A/32) log^2 x (e^{-nu log x} - x^{-3/8})
  bool holds = false;      ///< added < dropped
};

inline DominanceCheck dominance_check(double x_log, double k, const BoundParams& params = {}) {
  params.validate();
  DominanceCheck d;
  d.T_log = solve_log_T(x_log, k);
  d.nu = zero_free_nu_log(d.T_log, params);
  const double ly = std::log(x_log);
  d.dropped_log = std::log(27 * params.A / 256) + (4 - k) * ly - 0.375 * std::pow(x_log, k);
  // e^{-a} - e^{-b} = e^{-a} (1 - e^{a-b}) for a < b
  const double a = d.nu * x_log;
  const double b = 0.375 * x_log;
  const double diff_log = a < b ? -a + std::log1p(-std::exp(a - b))
                                : -std::numeric_limits<double>::infinity();
  d.added_log = std::log(927 * params.A / 32) + 2 * ly + diff_log;
  d.holds = d.added_log < d.dropped_log;
  return d;
}

// ---------------------------------------------------------------------------
// The two inequalities.
// ---------------------------------------------------------------------------

/// Inequality (1) as LHS - RHS; negative means satisfied at y.
inline double ineq1_margin(double y, const ThresholdProblem& problem) {
  if (!(y > kE)) throw DomainError("ineq1_margin needs y > e");
  const auto& p = problem.params;
  const double ly = std::log(y);
  return std::log(27 * p.A / 256) + (p.L - 1 - problem.k) * ly -
         4 / (std::cbrt(9.0) * p.c_ford) * std::pow(y, problem.k - 2.0 / 3) / std::cbrt(ly) -
         std::log(0.5 * (1 - problem.eps));
}

namespace detail {

// Inequality (2) in terms of u = log y.
template <typename Real>
Real ineq2_margin_log(const Real& u, const ThresholdProblem& problem) {
  using std::exp;
  using std::log;
  const Real k = problem.k;
  const Real m = problem.m;
  const Real three_eighths = Real(3) / 8;
  const Real rhs = log(m / 12 * (1 - Real(problem.eps)));
  return Real(11) / 4 * u + three_eighths * exp(k * u) - (three_eighths - 1 / m) * exp(u) - rhs;
}

}  // namespace detail

/// Inequality (2) for general m as LHS - RHS; m = 3 is the cube case
/// 11/4 log y + 3/8 y^k - y/24 < log(1/4 (1 - eps)). The leading terms
/// cancel to about 1e-3 relative near the threshold, hence Real defaults to
/// 30 digits.
template <typename Real = Float30>
Real ineq2_margin(const Real& y, const ThresholdProblem& problem) {
  using std::log;
  if (!(y > Real(kE))) throw DomainError("ineq2_margin needs y > e");
  return detail::ineq2_margin_log<Real>(log(y), problem);
}

inline double ineq2_margin(double y, const ThresholdProblem& problem) {
  return static_cast<double>(ineq2_margin<Float30>(Float30(y), problem));
}

/// The constant 2 in g/h < 2 log^{11/4} x x^{-1/24} exp(3/8 log^k x), with
/// the Ramare-Saouter factor that bounds (x + h)/x.
struct GOverHConstant {
  double constant = 2;
  double delta = 0;
  double delta_factor = 0;     ///< 1 / (1 - 1/delta)
  double implied_constant = 0; ///< 12 (3/8)^{3/4} / 3 * delta_factor
  bool consistent = false;     ///< implied_constant < constant
};

inline GOverHConstant g_over_h_margin_source(double delta = BoundParams{}.delta_rs) {
  if (!(delta > 1)) throw DomainError("g_over_h_margin_source needs delta > 1");
  GOverHConstant g;
  g.delta = delta;
  g.delta_factor = 1 / (1 - 1 / delta);
  g.implied_constant = 4 * std::pow(3.0 / 8, 0.75) * g.delta_factor;
  g.consistent = g.implied_constant < g.constant;
  return g;
}

/// E(x, h, 2/3) / h for h = m x^{1 - 1/m}: the part of the lower bound for
/// theta(x + h) - theta(x) not covered by inequalities (1) and (2),
///   h log^{1/4} x e^{-(3/8) log^{2/3} x} / (6^{3/4} pi)
///   + 1.00007 (x+h)^{1/2} + 1.78 (x+h)^{1/3} - 0.9999 x^{1/2}.
inline double error_term_margin(double x_log, unsigned m, const BoundParams& params = {}) {
  if (!(x_log >= 60)) throw DomainError("error_term_margin needs log x >= 60");
  if (m < 2) throw DomainError("error_term_margin needs m >= 2");
  const double inv_m = 1.0 / m;
  const double h_log = std::log(static_cast<double>(m)) + (1 - inv_m) * x_log;
  const double xh_log = x_log + std::log1p(std::exp(h_log - x_log));  // log(x + h)
  const double k = 2.0 / 3;
  const double zeros = 0.25 * std::log(x_log) - 0.375 * std::pow(x_log, k) -
                       std::log(std::pow(6.0, 0.75) * kPi);
  return std::exp(zeros) + params.dusart_hi1 * std::exp(0.5 * xh_log - h_log) +
         params.dusart_hi2 * std::exp(xh_log / 3 - h_log) -
         params.dusart_lo * std::exp(0.5 * x_log - h_log);
}

// ---------------------------------------------------------------------------
// Root finding and k optimization.
// ---------------------------------------------------------------------------

/// Search bracket for y.
inline constexpr double kYLow = 7.38905609893065;  // e^2
inline constexpr double kYHigh = 1e20;

namespace detail {

// Smallest u in [u_lo, u_hi] beyond which margin(u) <= 0 on a 256-point grid,
// refined by bisection on the last sign change.
template <typename Margin>
double last_crossing(Margin&& margin, double u_lo, double u_hi, const char* which) {
  constexpr int kGrid = 256;
  auto u_at = [&](int i) { return u_lo + (u_hi - u_lo) * i / kGrid; };
  if (margin(u_hi) > 0) {
    throw NoThreshold(std::string(which) + " still violated at y = 1e20");
  }
  int i = kGrid - 1;
  while (i >= 0 && !(margin(u_at(i)) > 0)) --i;
  if (i < 0) throw NoThreshold(std::string(which) + " has no sign change above y = e^2");
  double lo = u_at(i), hi = u_at(i + 1);
  for (int it = 0; it < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (margin(mid) > 0 ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace detail

inline ThresholdSolution solve_threshold(const ThresholdProblem& problem) {
  problem.validate();
  const double u_lo = std::log(kYLow), u_hi = std::log(kYHigh);
  const double u1 = detail::last_crossing(
      [&](double u) { return ineq1_margin(std::exp(u), problem); }, u_lo, u_hi, "inequality (1)");
  const double u2 = detail::last_crossing(
      [&](double u) {
        return static_cast<double>(detail::ineq2_margin_log<Float30>(Float30(u), problem));
      },
      u_lo, u_hi, "inequality (2)");
  ThresholdSolution s;
  s.k_used = problem.k;
  s.ineq1_root = std::exp(u1);
  s.ineq2_root = std::exp(u2);
  const double u0 = std::max(u1, u2);
  s.y0 = std::exp(u0);
  s.loglog_n0 = u0 - std::log(static_cast<double>(problem.m));
  s.ineq1_margin_at_y0 = ineq1_margin(s.y0, problem);
  s.ineq2_margin_at_y0 =
      static_cast<double>(detail::ineq2_margin_log<Float30>(Float30(u0), problem));
  return s;
}

struct KGrid {
  int points = 64;       ///< coarse grid size on (2/3 + delta, 1 - delta)
  double delta = 1e-4;
  double k_tol = 1e-10;  ///< golden-section stopping width
};

struct KOptimum {
  double k_best = 0;
  ThresholdSolution solution;
};

/// Minimizes y0 over k: coarse grid, then golden-section refinement around
/// the best grid point. Ties go to the smaller k.
inline KOptimum optimize_k(unsigned m, const BoundParams& params = {}, const KGrid& grid = {}) {
  if (m < 3) throw DomainError("optimize_k needs m >= 3");
  if (grid.points < 3) throw DomainError("optimize_k needs at least 3 grid points");
  const double k_lo = 2.0 / 3 + grid.delta, k_hi = 1 - grid.delta;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  auto objective = [&](double k) {
    try {
      return solve_threshold({m, k, params}).y0;
    } catch (const NoThreshold&) {
      return kInf;
    }
  };
  std::vector<double> ks(grid.points), ys(grid.points);
  int best = -1;
  for (int i = 0; i < grid.points; ++i) {
    ks[i] = k_lo + (k_hi - k_lo) * i / (grid.points - 1);
    ys[i] = objective(ks[i]);
    if (ys[i] < kInf && (best < 0 || ys[i] < ys[best])) best = i;
  }
  if (best < 0) throw NoThreshold("no k in (2/3, 1) gives a threshold below y = 1e20");

  double a = ks[std::max(best - 1, 0)];
  double b = ks[std::min(best + 1, grid.points - 1)];
  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = objective(c), fd = objective(d);
  while (b - a > grid.k_tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = objective(d);
    }
  }
  double k_best = fc <= fd ? c : d;
  if (ys[best] < std::min(fc, fd)) k_best = ks[best];
  return {k_best, solve_threshold({m, k_best, params})};
}

struct LRow {
  double L = 0;
  double k_best = 0;
  double y0 = 0;
  double loglog_n0 = 0;
};

/// Cube thresholds with the density log exponent L - 2 sigma in place of
/// 5 - 2 sigma, which turns (4 - k) into (L - 1 - k) in inequality (1).
inline std::vector<LRow> l_sensitivity_table(const BoundParams& params,
                                             std::span<const int> L_values,
                                             const KGrid& grid = {}) {
  std::vector<LRow> rows;
  for (int L : L_values) {
    if (L < 2) throw DomainError("l_sensitivity_table needs L >= 2");
    BoundParams p = params;
    p.L = L;
    const auto opt = optimize_k(3, p, grid);
    rows.push_back({static_cast<double>(L), opt.k_best, opt.solution.y0, opt.solution.loglog_n0});
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Primes between all consecutive m-th powers.
// ---------------------------------------------------------------------------

/// Threshold known for one power: a prime in (n^m, (n+1)^m) for all
/// n >= exp(exp(loglog_n0)).
struct MPowerAnchor {
  unsigned m = 1000;
  double loglog_n0 = 19.807;
};

struct MPowerResult {
  double m = 0;            ///< smallest power covering every n >= 1
  double C = 0;            ///< m_anchor * exp(loglog_n0)
  double n_log = 0;        ///< log n at the crossing, C / m
  double consistency = 0;  ///< (n / log^2 n) / (111 m^3)
};

/// Solves exp(C/m) = 111 C^2 m, where n >= exp(C/m) comes from the anchor and
/// n / log^2 n < 111 m^3 from a short-interval prime result.
inline MPowerResult mpower_unconditional(const MPowerAnchor& anchor = {}) {
  if (anchor.m < 1) throw DomainError("mpower_unconditional needs a positive anchor power");
  MPowerResult r;
  r.C = anchor.m * std::exp(anchor.loglog_n0);
  const double log_C = std::log(r.C);
  // g(v) with v = log m is strictly decreasing.
  auto g = [&](double v) { return r.C * std::exp(-v) - (std::log(111.0) + 2 * log_C + v); };
  double lo = std::log(1e6), hi = std::log(1e12);
  if (g(lo) < 0 || g(hi) > 0) throw NoSolution("mpower_unconditional: no root in (1e6, 1e12)");
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0 ? lo : hi) = mid;
  }
  r.m = std::exp(hi);
  r.n_log = r.C / r.m;
  const double lhs_log = r.n_log - 2 * std::log(r.n_log);
  const double rhs_log = std::log(111.0) + 3 * hi;
  r.consistency = std::exp(lhs_log - rhs_log);
  return r;
}

/// Published anchor versus the one recomputed with optimize_k.
struct AnchorReport {
  MPowerAnchor published;
  MPowerAnchor recomputed;
  double k_best = 0;
  double discrepancy = 0;  ///< recomputed - published log log n0
};

inline AnchorReport recompute_anchor(const BoundParams& params = {},
                                     const MPowerAnchor& published = {}) {
  AnchorReport a;
  a.published = published;
  const auto opt = optimize_k(published.m, params);
  a.k_best = opt.k_best;
  a.recomputed = {published.m, opt.solution.loglog_n0};
  a.discrepancy = a.recomputed.loglog_n0 - published.loglog_n0;
  return a;
}

}  // namespace gaplab
