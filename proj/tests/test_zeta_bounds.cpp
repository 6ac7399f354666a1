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
#include <complex>

#include "gaplab/zeros.hpp"
#include "gaplab/zeta_bounds.hpp"
#include "oracles.hpp"

namespace {

using gaplab::BoundParams;

TEST(BoundParams, Validation) {
  EXPECT_NO_THROW(BoundParams{}.validate());
  BoundParams p;
  p.L = 1.5;
  EXPECT_THROW(p.validate(), gaplab::DomainError);
  p = {};
  p.A = 0;
  EXPECT_THROW(p.validate(), gaplab::DomainError);
  p = {};
  p.c_ford = -1;
  EXPECT_THROW(p.validate(), gaplab::DomainError);
}

TEST(NUpper, Values) {
  EXPECT_NEAR(gaplab::n_upper(100), oracle::kNUpper100, 1e-12);
  EXPECT_THROW(gaplab::n_upper(std::exp(1.0)), gaplab::DomainError);
  EXPECT_THROW(gaplab::n_upper(15), gaplab::DomainError);
}

TEST(DensityBound, Values) {
  EXPECT_NEAR(gaplab::density_bound(1, 2000), oracle::kDensity1At2000, 1e-9);
  EXPECT_NEAR(gaplab::density_bound(0.52, 2000), oracle::kDensity052At2000,
              1e-12 * oracle::kDensity052At2000);
  EXPECT_THROW(gaplab::density_bound(0.5, 2000), gaplab::DomainError);
  EXPECT_THROW(gaplab::density_bound(0.6, 1999), gaplab::DomainError);
}

TEST(DensityBound, SigmaOneIsExact) {
  for (double T : {2000.0, 1e5, 1e12}) {
    const double lt = std::log(T);
    EXPECT_DOUBLE_EQ(gaplab::density_bound(1, T), 9.7 * lt * lt * lt + 103 * lt * lt);
  }
}

TEST(DensityBound, NonincreasingInSigma) {
  for (double T : {2000.0, 1e6, 1e20}) {
    double prev = gaplab::density_bound(0.52, T);
    for (double s = 0.53; s <= 1.0 + 1e-12; s += 0.01) {
      const double v = gaplab::density_bound(std::min(s, 1.0), T);
      ASSERT_LE(v, prev) << T << " " << s;
      prev = v;
    }
  }
}

TEST(DensityBound, DoublingAScalesLeadingTerm) {
  BoundParams p;
  p.A *= 2;
  const double T = 1e8, s = 0.7, lt = std::log(T);
  const double tail = 103 * lt * lt;
  EXPECT_NEAR(gaplab::density_bound(s, T, p) - tail, 2 * (gaplab::density_bound(s, T) - tail),
              1e-9 * gaplab::density_bound(s, T, p));
}

TEST(ZeroFreeNu, Values) {
  EXPECT_NEAR(gaplab::zero_free_nu(std::exp(std::exp(1.0))), oracle::kNuEE, 1e-15);
  EXPECT_NEAR(gaplab::zero_free_nu(3), oracle::kNu3, 1e-15);
  EXPECT_THROW(gaplab::zero_free_nu(2.9), gaplab::DomainError);
}

TEST(ZeroFreeNu, LogFormMatches) {
  for (double T : {3.0, 1e4, 1e200}) {
    EXPECT_DOUBLE_EQ(gaplab::zero_free_nu_log(std::log(T)), gaplab::zero_free_nu(T));
  }
  EXPECT_GT(gaplab::zero_free_nu_log(1e6), 0);  // T = e^1000000
  EXPECT_THROW(gaplab::zero_free_nu_log(1.0), gaplab::DomainError);
}

TEST(ZeroFreeNu, InverseInC) {
  BoundParams twice;
  twice.c_ford *= 2;
  for (double T : {3.0, 100.0, 1e9, 1e300}) {
    EXPECT_NEAR(gaplab::zero_free_nu(T, twice), gaplab::zero_free_nu(T) / 2,
                1e-15 * gaplab::zero_free_nu(T));
  }
}

TEST(ZeroFreeNu, RegionNarrowerThanHalfAtTableOrdinates) {
  const auto t = gaplab::load_zeros_file(GAPLAB_ZEROS_FILE);
  for (double g : t.ordinates()) ASSERT_LT(gaplab::zero_free_nu(g), 0.5) << g;
}

TEST(LeftBound, Values) {
  EXPECT_DOUBLE_EQ(gaplab::zetaprime_over_zeta_left_bound({-1, 0}), 9);
  EXPECT_NEAR(gaplab::zetaprime_over_zeta_left_bound({-std::exp(2.0), 0}), 11, 1e-14);
  EXPECT_NEAR(gaplab::zetaprime_over_zeta_left_bound({-4, 3}), 9 + std::log(5.0), 1e-14);
  EXPECT_THROW(gaplab::zetaprime_over_zeta_left_bound({-0.5, 1}), gaplab::DomainError);
}

TEST(StripBound, Values) {
  EXPECT_NEAR(gaplab::zetaprime_over_zeta_strip_bound(std::exp(10.0)), 300, 1e-12);
  EXPECT_NEAR(gaplab::zetaprime_over_zeta_strip_bound(51), oracle::kStrip51, 1e-12);
  EXPECT_THROW(gaplab::zetaprime_over_zeta_strip_bound(50), gaplab::DomainError);
}

TEST(ChoicetBound, Values) {
  EXPECT_NEAR(gaplab::choicet_bound(std::exp(10.0)), 110, 1e-12);
  EXPECT_NEAR(gaplab::choicet_bound(1e4), oracle::kChoicet1e4, 1e-12);
  EXPECT_THROW(gaplab::choicet_bound(49), gaplab::DomainError);
}

}  // namespace
