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

// The reproduction suite: every headline number and empirical check, each
// pinned to an expected value and tolerance. Shared by `gaplab reproduce`
// and the acceptance test binary.

#include <chrono>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "gaplab/arith.hpp"
#include "gaplab/explicit_formula.hpp"
#include "gaplab/report.hpp"
#include "gaplab/threshold.hpp"
#include "gaplab/zeros.hpp"
#include "gaplab/zeta_bounds.hpp"

namespace gaplab {

struct ReproduceOptions {
  bool quick = false;                 ///< skip sieve work above 1e7
  const ZeroTable* zeros = nullptr;   ///< zero-dependent criteria are n/a without one
  SieveConfig sieve;
  BoundParams params;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<RunReport> rows;
  double seconds = 0;
  bool skipped = false;
  std::string skip_reason;

  Verdict verdict() const {
    if (skipped) return Verdict::not_applicable;
    for (const auto& r : rows) {
      if (r.verdict == Verdict::fail) return Verdict::fail;
    }
    return Verdict::pass;
  }
};

namespace detail {

inline RunReport expect_row(std::string command, double observed, double expected, double tol,
                            std::string note = {}) {
  RunReport r;
  r.command = std::move(command);
  r.expectation = Expectation{expected, tol};
  r.note = std::move(note);
  r.judge(observed);
  return r;
}

/// Passes when observed lies in [lo, hi].
inline RunReport range_row(std::string command, double observed, double lo, double hi,
                           std::string note = {}) {
  return expect_row(std::move(command), observed, 0.5 * (lo + hi), 0.5 * (hi - lo),
                    std::move(note));
}

/// Passes when no failures were counted.
inline RunReport count_row(std::string command, double failures, std::size_t checked) {
  auto r = expect_row(std::move(command), failures, 0, 0);
  r.outputs.emplace_back("checked", std::to_string(checked));
  return r;
}

inline RunReport info_row(std::string command, double observed, std::string note = {}) {
  RunReport r;
  r.command = std::move(command);
  r.note = std::move(note);
  r.judge(observed);
  return r;
}

template <typename Body>
CriterionResult timed(int id, std::string title, double limit_seconds, Body&& body) {
  CriterionResult c;
  c.id = id;
  c.title = std::move(title);
  const auto start = std::chrono::steady_clock::now();
  body(c);
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!c.skipped && limit_seconds > 0) {
    c.rows.push_back(range_row("runtime seconds", c.seconds, 0, limit_seconds));
  }
  return c;
}

}  // namespace detail

/// Cube threshold: optimized k and log log n0, and y0 against 8e14.
inline CriterionResult criterion_cube_threshold(const ReproduceOptions& opt) {
  return detail::timed(1, "cube threshold", 10, [&](CriterionResult& c) {
    const auto best = optimize_k(3, opt.params);
    auto row = detail::expect_row("cube log log n0", best.solution.loglog_n0, 33.217, 0.01);
    row.outputs = {{"k", format_sig(best.k_best, 6)}, {"y0", format_sig(best.solution.y0, 6)}};
    c.rows.push_back(row);
    c.rows.push_back(detail::expect_row("cube k_best", best.k_best, 0.9359, 0.002));
    c.rows.push_back(
        detail::range_row("cube y0 / 8e14", best.solution.y0 / 8e14, 1 / 1.2, 1.2));
  });
}

/// L-table and the A, c sensitivity rows.
inline CriterionResult criterion_sensitivity(const ReproduceOptions& opt) {
  return detail::timed(2, "L-table and sensitivity", 60, [&](CriterionResult& c) {
    const int Ls[] = {2, 3, 4, 5};
    const double expected[] = {22.19, 29.8, 31.8, 33.217};
    const double tol[] = {0.05, 0.1, 0.1, 0.01};
    const auto rows = l_sensitivity_table(opt.params, Ls);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto r = detail::expect_row("L=" + std::to_string(Ls[i]) + " log log n0", rows[i].loglog_n0,
                                  expected[i], tol[i]);
      r.outputs = {{"k", format_sig(rows[i].k_best, 6)}, {"y0", format_sig(rows[i].y0, 6)}};
      c.rows.push_back(r);
    }
    struct Variant {
      const char* name;
      BoundParams params;
      double expected, tol;
    };
    BoundParams c40 = opt.params, c20 = opt.params, a_small = opt.params;
    c40.c_ford = 40;
    c20.c_ford = 20;
    a_small.A = 1e-4;
    for (const auto& v : {Variant{"c_ford=40", c40, 31.88, 0.05}, Variant{"c_ford=20", c20, 29.6, 0.1},
                          Variant{"A=1e-4", a_small, 32.7, 0.1}}) {
      const auto best = optimize_k(3, v.params);
      auto r = detail::expect_row(std::string(v.name) + " log log n0", best.solution.loglog_n0,
                                  v.expected, v.tol);
      r.outputs = {{"k", format_sig(best.k_best, 6)}, {"y0", format_sig(best.solution.y0, 6)}};
      c.rows.push_back(r);
    }
  });
}

/// Thresholds for primes between consecutive m-th powers.
inline CriterionResult criterion_mpower_table(const ReproduceOptions& opt) {
  return detail::timed(3, "m-power table", 0, [&](CriterionResult& c) {
    struct Row {
      unsigned m;
      double k, loglog;
    };
    for (const auto& row : {Row{4, 0.9635, 29.240}, Row{5, 0.9741, 27.820}, Row{6, 0.9796, 27.230},
                            Row{7, 0.983, 26.427}, Row{1000, 0.9998, 19.807}}) {
      const auto best = optimize_k(row.m, opt.params);
      const auto m = std::to_string(row.m);
      auto r = detail::expect_row("m=" + m + " log log n0", best.solution.loglog_n0, row.loglog,
                                  0.05);
      r.outputs = {{"k", format_sig(best.k_best, 6)}, {"y0", format_sig(best.solution.y0, 6)}};
      c.rows.push_back(r);
      c.rows.push_back(detail::expect_row("m=" + m + " k_best", best.k_best, row.k, 0.003));
    }
  });
}

/// Smallest m with a prime between all consecutive m-th powers.
inline CriterionResult criterion_mpower_unconditional(const ReproduceOptions&) {
  return detail::timed(4, "all m-th powers", 0, [&](CriterionResult& c) {
    const auto r = mpower_unconditional();
    c.rows.push_back(detail::expect_row("unconditional m", r.m, 4.971e9, 0.01e9));
    c.rows.push_back(detail::expect_row("n/log^2 n vs 111 m^3", r.consistency, 1, 0.01));
  });
}

/// Height just below the top ordinate of a table, away from any zero.
inline double top_truncation_height(const ZeroTable& table) {
  const auto ords = table.ordinates();
  if (ords.size() < 2) return table.height();
  return 0.5 * (ords[ords.size() - 1] + ords[ords.size() - 2]);
}

/// Truncated explicit formula against sieve psi at desk-scale x.
inline CriterionResult criterion_explicit_formula(const ReproduceOptions& opt) {
  return detail::timed(5, "explicit formula empirics", 120, [&](CriterionResult& c) {
    if (!opt.zeros) {
      c.skipped = true;
      c.skip_reason = "no zero table";
      return;
    }
    const auto& table = *opt.zeros;
    std::vector<double> xs = {1e3 + 0.5, 1e5 + 0.5, 1e6 + 0.5};
    if (!opt.quick) xs.push_back(1e7 + 0.5);
    std::vector<double> Ts;
    for (double T : {1e3, 1e4}) {
      if (T < table.height()) Ts.push_back(T);
    }
    Ts.push_back(top_truncation_height(table));
    const auto exact = chebyshev_sweep(xs, opt.sieve);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      double worst_ratio = 0;
      int not_decreasing = 0;
      double prev = std::numeric_limits<double>::infinity();
      for (double T : Ts) {
        const auto r = truncated_psi(xs[i], T, table);
        const double dev = std::fabs(r.psi_estimate - exact[i].psi);
        worst_ratio = std::max(worst_ratio, dev / r.error_bound);
        if (!(dev < prev)) ++not_decreasing;
        prev = dev;
        c.rows.push_back(detail::info_row(
            "x=" + format_sig(xs[i], 10) + " T=" + format_sig(T, 8) + " |psi - estimate|", dev,
            "bound " + format_sig(r.error_bound, 6)));
      }
      c.rows.push_back(detail::range_row("x=" + format_sig(xs[i], 10) + " max deviation/bound",
                                         worst_ratio, 0, 1));
      c.rows.push_back(detail::count_row("x=" + format_sig(xs[i], 10) + " non-decreasing steps in T",
                                         not_decreasing, Ts.size()));
    }
  });
}

/// Truncation error budget against 2 x log^2 x / T, in log space.
inline CriterionResult criterion_error_budget(const ReproduceOptions&) {
  return detail::timed(6, "explicit formula constant", 1, [&](CriterionResult& c) {
    for (double x_log : {60.0, 80.0, 100.0}) {
      for (double T_log : {std::log(51.0), x_log / 2, x_log - std::log(2.0)}) {
        const auto e = error_budget(x_log, T_log);
        c.rows.push_back(detail::range_row(
            "budget ratio x=e^" + format_sig(x_log, 4) + " log T=" + format_sig(T_log, 6),
            e.ratio, 0, 1));
      }
    }
  });
}

inline CriterionResult criterion_big_sum(const ReproduceOptions&) {
  return detail::timed(7, "big-sum constant 2.8", 0, [&](CriterionResult& c) {
    const auto corrected = big_sum_bound(1.194, 60, true);
    c.rows.push_back(detail::range_row("ratio, corrected S4", corrected.ratio, 2.5, 2.8));
    const auto verbatim = big_sum_bound(1.194, 60, false);
    c.rows.push_back(detail::info_row("ratio, S4 as printed", verbatim.ratio, "informational"));
  });
}

inline CriterionResult criterion_zero_table(const ReproduceOptions& opt) {
  return detail::timed(8, "zero table cross-checks", 0, [&](CriterionResult& c) {
    if (!opt.zeros) {
      c.skipped = true;
      c.skip_reason = "no zero table";
      return;
    }
    const auto& table = *opt.zeros;
    if (table.height() >= 100) {
      c.rows.push_back(detail::expect_row("N(100)", static_cast<double>(count_zeros(table, 100)),
                                          29, 0));
    }
    constexpr int kSamples = 200;
    int over = 0;
    for (int i = 1; i <= kSamples; ++i) {
      const double T = 15 + (table.height() - 15) * i / kSamples;
      if (!(static_cast<double>(count_zeros(table, T)) < n_upper(T))) ++over;
    }
    c.rows.push_back(detail::count_row("N(T) >= T log T / 2pi", over, kSamples));
    int bad = 0;
    std::size_t checked = 0;
    const double t_max = std::min(table.height() - 1, 250000.0);
    for (double t = 51; t <= t_max; t += 1) {
      if (!window_count_check(table, t).ok) ++bad;
      ++checked;
    }
    c.rows.push_back(detail::count_row("N(t+1) - N(t-1) >= log t", bad, checked));
  });
}

/// Geometric grid of n points from lo to hi.
inline std::vector<double> geometric_samples(double lo, double hi, std::size_t n) {
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1));
  }
  xs.back() = hi;
  return xs;
}

inline CriterionResult criterion_dusart(const ReproduceOptions& opt) {
  return detail::timed(9, "psi - theta bounds", 0, [&](CriterionResult& c) {
    const double hi = opt.quick ? 1e7 : 1e8;
    const auto xs = geometric_samples(121, hi, 10000);
    int bad = 0;
    for (const auto& d : psi_theta_gap_check(xs, opt.sieve)) {
      if (!d.lower_ok || !d.upper_ok) ++bad;
    }
    c.rows.push_back(detail::count_row("Dusart bound failures up to " + format_sig(hi, 3), bad,
                                       xs.size()));
  });
}

inline CriterionResult criterion_cube_gaps(const ReproduceOptions&) {
  return detail::timed(10, "primes between cubes to n = 1e5", 300, [&](CriterionResult& c) {
    int exhausted = 0;
    const auto certs = cube_gap_scan(1, 100000, 3);
    for (const auto& cert : certs) {
      if (cert.status != GapStatus::found) ++exhausted;
    }
    c.rows.push_back(detail::count_row("cube intervals without a prime", exhausted, certs.size()));
  });
}

using CriterionFn = std::function<CriterionResult(const ReproduceOptions&)>;

inline std::vector<CriterionFn> reproduction_suite() {
  return {criterion_cube_threshold,   criterion_sensitivity, criterion_mpower_table,
          criterion_mpower_unconditional, criterion_explicit_formula,
          criterion_error_budget,     criterion_big_sum,     criterion_zero_table,
          criterion_dusart,           criterion_cube_gaps};
}

}  // namespace gaplab
