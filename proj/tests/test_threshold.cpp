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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "gaplab/threshold.hpp"
#include "oracles.hpp"

namespace {

using gaplab::BoundParams;
using gaplab::ThresholdProblem;

TEST(SolveT, Values) {
  const double T = gaplab::solve_T(60, 0.9359);
  EXPECT_NEAR(T, 25.0, 0.5);
  // The defining relation holds at the root.
  const double lhs = 8.0 / 3 * std::log(3 * T) + 2 * std::log(std::log(T));
  EXPECT_NEAR(lhs, 60 - std::pow(60.0, 0.9359), 1e-9);
  EXPECT_THROW(gaplab::solve_T(1, 0.9), gaplab::NoSolution);
  EXPECT_THROW(gaplab::solve_T(60, 0.5), gaplab::DomainError);
}

TEST(SolveT, IncreasingInX) {
  double prev = 0;
  for (double xl : {60.0, 100.0, 1e3, 1e6, 1e12, 8e14}) {
    const double u = gaplab::solve_log_T(xl, 0.9359);
    EXPECT_GT(u, prev);
    prev = u;
  }
  EXPECT_NEAR(std::log(gaplab::solve_T(300, 0.9359)), gaplab::solve_log_T(300, 0.9359), 1e-12);
}

TEST(ZeroSumBound, Term2AtThreshold) {
  const auto b = gaplab::zero_sum_bound(8e14, 0.9359);
  EXPECT_NEAR(b.term2_log, oracle::kTerm2At8e14, 1e-9);
}

TEST(ZeroSumBound, DoublingAAddsLog2) {
  BoundParams p;
  p.A *= 2;
  const auto a = gaplab::zero_sum_bound(1e10, 0.95);
  const auto b = gaplab::zero_sum_bound(1e10, 0.95, p);
  EXPECT_NEAR(b.term2_log - a.term2_log, std::log(2.0), 1e-12);
  EXPECT_EQ(b.term1_log, a.term1_log);
}

TEST(Dominance, DroppedTermDoesNotDominate) {
  // The neglected zero-free-region term outweighs the one it is traded
  // against at desk-checkable x, and the gap widens with x.
  const auto d60 = gaplab::dominance_check(60, 0.9359);
  EXPECT_FALSE(d60.holds);
  EXPECT_GT(d60.added_log, d60.dropped_log);
  const auto d_far = gaplab::dominance_check(8e14, 0.9359);
  EXPECT_FALSE(d_far.holds);
  EXPECT_GT(d_far.added_log - d_far.dropped_log, d60.added_log - d60.dropped_log);
}

TEST(Ineq1, Values) {
  const ThresholdProblem p;
  EXPECT_NEAR(gaplab::ineq1_margin(8e14, p), oracle::kIneq1At8e14, 1e-9);
  EXPECT_NEAR(gaplab::ineq1_margin(1e10, p), oracle::kIneq1At1e10, 1e-9);
  EXPECT_GT(gaplab::ineq1_margin(1e10, p), 0);
}

TEST(Ineq1, HalvingCLowersMargin) {
  // The only c-dependent term is subtracted and scales like 1/c.
  ThresholdProblem p, q;
  q.params.c_ford /= 2;
  for (double y : {1e5, 1e10, 8e14, 1e18}) {
    const double term = gaplab::ineq1_margin(y, p) - gaplab::ineq1_margin(y, q);
    EXPECT_GT(term, 0) << y;
    const double ly = std::log(y);
    EXPECT_NEAR(term, 4 / (std::cbrt(9.0) * p.params.c_ford) * std::pow(y, p.k - 2.0 / 3) /
                          std::cbrt(ly), 1e-9 * std::max(1.0, term));
  }
}

TEST(Ineq2, ValueAt8e14) {
  const ThresholdProblem p;
  const auto v = gaplab::ineq2_margin(gaplab::Float30(8e14), p);
  // k = 0.9359 is not exact in binary; that alone moves the value by ~0.05.
  EXPECT_NEAR(static_cast<double>(v), oracle::kIneq2At8e14, 1e-11 * std::fabs(oracle::kIneq2At8e14));
}

TEST(Ineq2, DoubleAndThirtyDigitsAgree) {
  const ThresholdProblem p;
  const double lo = gaplab::ineq2_margin<double>(8e14, p);
  const double hi = static_cast<double>(gaplab::ineq2_margin(gaplab::Float30(8e14), p));
  EXPECT_NEAR(lo, hi, 1e-6 * std::fabs(hi));
}

TEST(Ineq2, KNearOneIsViolated) {
  ThresholdProblem p;
  p.k = 0.99999999;
  EXPECT_GT(gaplab::ineq2_margin(1e6, p), 0);
}

TEST(GOverH, Factor) {
  const auto g = gaplab::g_over_h_margin_source();
  EXPECT_NEAR(g.delta_factor, oracle::kGOverHFactor, 1e-16);
  EXPECT_TRUE(g.consistent);
  EXPECT_NEAR(gaplab::g_over_h_margin_source(2).delta_factor, 2, 1e-15);
  EXPECT_NEAR(gaplab::g_over_h_margin_source(1e300).delta_factor, 1, 1e-15);
  EXPECT_THROW(gaplab::g_over_h_margin_source(1), gaplab::DomainError);
}

TEST(ErrorTerm, BelowSlack) {
  const double e60 = gaplab::error_term_margin(60, 3);
  EXPECT_LT(e60, 1e-3);
  EXPECT_LT(gaplab::error_term_margin(120, 3), e60);
  EXPECT_THROW(gaplab::error_term_margin(59, 3), gaplab::DomainError);
}

TEST(SolveThreshold, CubeAtPublishedK) {
  const auto s = gaplab::solve_threshold({});
  EXPECT_NEAR(s.y0 / 8e14, 1, 0.2);
  EXPECT_NEAR(s.loglog_n0, 33.217, 0.01);
  EXPECT_DOUBLE_EQ(s.loglog_n0 + std::log(3.0), std::log(s.y0));
  EXPECT_LE(s.ineq1_margin_at_y0, 1e-9);
  EXPECT_LE(s.ineq2_margin_at_y0, 1e-3);
  EXPECT_EQ(s.y0, std::max(s.ineq1_root, s.ineq2_root));
  EXPECT_EQ(s.k_used, 0.9359);
}

TEST(SolveThreshold, RootsAreGenuineSignChanges) {
  const ThresholdProblem p;
  const auto s = gaplab::solve_threshold(p);
  EXPECT_LT(gaplab::ineq1_margin(s.ineq1_root * (1 + 1e-3), p), 0);
  EXPECT_GT(gaplab::ineq1_margin(s.ineq1_root * (1 - 1e-3), p), 0);
  EXPECT_LT(gaplab::ineq2_margin(s.ineq2_root * (1 + 1e-3), p), 0);
  EXPECT_GT(gaplab::ineq2_margin(s.ineq2_root * (1 - 1e-3), p), 0);
  EXPECT_LT(gaplab::ineq1_margin(s.y0 * (1 + 1e-3), p), 0);
  EXPECT_LT(gaplab::ineq2_margin(s.y0 * (1 + 1e-3), p), 0);
}

TEST(SolveThreshold, KNearTwoThirds) {
  ThresholdProblem p;
  p.k = 0.67;
  try {
    const auto s = gaplab::solve_threshold(p);
    EXPECT_GT(s.y0, 1e18);
  } catch (const gaplab::NoThreshold&) {
    SUCCEED();
  }
}

TEST(SolveThreshold, Validation) {
  ThresholdProblem p;
  p.k = 1;
  EXPECT_THROW(gaplab::solve_threshold(p), gaplab::DomainError);
  p = {};
  p.m = 2;
  EXPECT_THROW(gaplab::solve_threshold(p), gaplab::DomainError);
}

TEST(OptimizeK, Cube) {
  const auto o = gaplab::optimize_k(3);
  EXPECT_NEAR(o.k_best, 0.9359, 0.002);
  EXPECT_LE(o.solution.loglog_n0, 33.217 + 0.01);
  EXPECT_NEAR(o.solution.loglog_n0, 33.217, 0.01);
  // No grid point does better than the refined optimum.
  for (double k = 0.92; k <= 0.95; k += 0.001) {
    EXPECT_GE(gaplab::solve_threshold({3, k, {}}).y0, o.solution.y0 * (1 - 1e-9)) << k;
  }
}

TEST(OptimizeK, Deterministic) {
  const auto a = gaplab::optimize_k(5);
  const auto b = gaplab::optimize_k(5);
  EXPECT_EQ(a.k_best, b.k_best);
  EXPECT_EQ(a.solution.y0, b.solution.y0);
}

TEST(OptimizeK, PublishedFifthPowerRow) {
  const auto o = gaplab::optimize_k(5);
  EXPECT_NEAR(o.k_best, 0.9741, 0.003);
  EXPECT_NEAR(o.solution.loglog_n0, 27.820, 0.05);
}

TEST(OptimizeK, PublishedFordConstantRows) {
  BoundParams c40, c20;
  c40.c_ford = 40;
  c20.c_ford = 20;
  EXPECT_NEAR(gaplab::optimize_k(3, c40).solution.loglog_n0, 31.88, 0.05);
  EXPECT_NEAR(gaplab::optimize_k(3, c20).solution.loglog_n0, 29.6, 0.1);
}

TEST(OptimizeK, ThresholdGrowsWithFordConstant) {
  // A wider zero-free region (smaller c) lowers the threshold.
  double prev = 0;
  for (double c : {20.0, 30.0, 40.0, 57.54, 80.0}) {
    BoundParams p;
    p.c_ford = c;
    const double v = gaplab::optimize_k(3, p).solution.loglog_n0;
    EXPECT_GT(v, prev) << c;
    prev = v;
  }
}

TEST(OptimizeK, ThresholdNonincreasingAsADecreases) {
  double prev = 1e9;
  for (double A : {9.7, 1.0, 1e-2, 1e-4}) {
    BoundParams p;
    p.A = A;
    const double v = gaplab::optimize_k(3, p).solution.loglog_n0;
    EXPECT_LE(v, prev) << A;
    prev = v;
  }
}

TEST(OptimizeK, PublishedSmallDensityConstantRow) {
  BoundParams small;
  small.A = 1e-4;
  EXPECT_NEAR(gaplab::optimize_k(3, small).solution.loglog_n0, 32.7, 0.1);
}

TEST(OptimizeK, StrictlyDecreasingInM) {
  double prev = 1e9;
  for (unsigned m : {3u, 4u, 5u, 6u, 7u, 1000u}) {
    const double v = gaplab::optimize_k(m).solution.loglog_n0;
    EXPECT_LT(v, prev) << m;
    prev = v;
  }
}

TEST(LTable, PublishedRows) {
  const int Ls[] = {2, 3, 4, 5};
  const auto rows = gaplab::l_sensitivity_table({}, Ls);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_NEAR(rows[0].loglog_n0, 22.19, 0.05);
  EXPECT_NEAR(rows[1].loglog_n0, 29.8, 0.1);
  EXPECT_NEAR(rows[2].loglog_n0, 31.8, 0.1);
  EXPECT_NEAR(rows[3].loglog_n0, 33.217, 0.01);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GT(rows[i].loglog_n0, rows[i - 1].loglog_n0);
  const int bad[] = {1};
  EXPECT_THROW(gaplab::l_sensitivity_table({}, bad), gaplab::DomainError);
}

TEST(MPower, Unconditional) {
  const auto r = gaplab::mpower_unconditional();
  EXPECT_NEAR(r.m, 4.971e9, 0.01e9);
  EXPECT_NEAR(r.consistency, 1, 0.01);
  EXPECT_NEAR(r.n_log, r.C / r.m, 1e-9 * r.n_log);
}

TEST(MPower, MonotoneInC) {
  gaplab::MPowerAnchor doubled;
  doubled.loglog_n0 += std::log(2.0);  // C = m e^{loglog} doubles
  EXPECT_GT(gaplab::mpower_unconditional(doubled).m, gaplab::mpower_unconditional().m);
}

TEST(MPower, AnchorDiscrepancyIsReported) {
  const auto a = gaplab::recompute_anchor();
  EXPECT_EQ(a.published.loglog_n0, 19.807);
  EXPECT_DOUBLE_EQ(a.discrepancy, a.recomputed.loglog_n0 - 19.807);
  EXPECT_NEAR(a.k_best, 0.9998, 0.003);
}

TEST(MPower, PublishedTable) {
  struct Row {
    unsigned m;
    double k, loglog;
  };
  for (const auto& r : {Row{4, 0.9635, 29.240}, Row{5, 0.9741, 27.820}, Row{6, 0.9796, 27.230},
                        Row{7, 0.983, 26.427}, Row{1000, 0.9998, 19.807}}) {
    const auto o = gaplab::optimize_k(r.m);
    EXPECT_NEAR(o.k_best, r.k, 0.003) << r.m;
    EXPECT_NEAR(o.solution.loglog_n0, r.loglog, 0.05) << r.m;
  }
}

}  // namespace
