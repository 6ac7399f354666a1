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
#include <sstream>
#include <string>
#include <vector>

#include "gaplab/zeros.hpp"
#include "gaplab/zeta_bounds.hpp"

namespace {

using gaplab::ZeroTable;

ZeroTable parse(const std::string& s) {
  std::istringstream in(s);
  return gaplab::load_zeros(in, "test");
}

const ZeroTable& standard_table() {
  static const ZeroTable t = gaplab::load_zeros_file(GAPLAB_ZEROS_FILE);
  return t;
}

TEST(LoadZeros, TwoOrdinates) {
  const auto t = parse("14.134725\n21.022040\n");
  EXPECT_EQ(t.size(), 2u);
  EXPECT_NEAR(t.height(), 21.022, 1e-3);
  EXPECT_TRUE(t.anchored_at_zero());
  EXPECT_EQ(t.source_label(), "test");
}

TEST(LoadZeros, CommentsBlanksAndWhitespace) {
  const auto t = parse("# header\n\n   14.134725  \r\n# more\n");
  EXPECT_EQ(t.size(), 1u);
}

TEST(LoadZeros, RejectsDescending) {
  try {
    parse("21.0\n14.1\n");
    FAIL();
  } catch (const gaplab::OrderError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(LoadZeros, RejectsDuplicates) { EXPECT_THROW(parse("14.1\n14.1\n"), gaplab::OrderError); }

TEST(LoadZeros, RejectsGarbage) {
  try {
    parse("# ok\n14.1\n21.0x\n");
    FAIL();
  } catch (const gaplab::ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse("-3\n"), gaplab::ParseError);
  EXPECT_THROW(parse("0\n"), gaplab::ParseError);
  EXPECT_THROW(parse("inf\n"), gaplab::ParseError);
  EXPECT_THROW(parse("# only comments\n"), gaplab::ParseError);
  EXPECT_THROW(parse("14.1 21.0\n"), gaplab::ParseError);
}

TEST(LoadZeros, PartialTableIsNotAnchored) {
  const auto t = parse("21.022040\n25.010858\n");
  EXPECT_FALSE(t.anchored_at_zero());
  EXPECT_THROW(gaplab::count_zeros(t, 22), gaplab::NotAnchored);
}

TEST(Serialize, RoundTripsExactly) {
  const std::string text = "# label\n14.134725141734693\n21.02203963877155\n25.010857580145689\n";
  const auto t = parse(text);
  std::ostringstream out;
  gaplab::serialize(t, out);
  const auto back = parse(out.str());
  ASSERT_EQ(back.size(), t.size());
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(back.ordinates()[i], t.ordinates()[i]);
}

TEST(CountZeros, SmallTable) {
  const auto t = parse("14.134725\n21.022040\n25.010858\n");
  EXPECT_EQ(gaplab::count_zeros(t, 14), 0u);
  EXPECT_EQ(gaplab::count_zeros(t, 21.5), 2u);
  EXPECT_EQ(gaplab::count_zeros(t, 25.010858), 3u);
  EXPECT_THROW(gaplab::count_zeros(t, t.height() + 1), gaplab::HeightExceeded);
}

// The standard fixture: the first 100000 zeros.

TEST(StandardTable, Shape) {
  const auto& t = standard_table();
  EXPECT_EQ(t.size(), 100000u);
  EXPECT_TRUE(t.anchored_at_zero());
  // Published values of the first five ordinates and of the 100000th.
  const double first[] = {14.134725142, 21.022039639, 25.010857580, 30.424876126, 32.935061588};
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(t.ordinates()[i], first[i], 1e-9) << i;
  EXPECT_NEAR(t.height(), 74920.827498994, 1e-8);
}

TEST(StandardTable, CountsAgreeWithPublishedTables) {
  const auto& t = standard_table();
  EXPECT_EQ(gaplab::count_zeros(t, 14), 0u);
  EXPECT_EQ(gaplab::count_zeros(t, 100), 29u);
  EXPECT_EQ(gaplab::count_zeros(t, 1000), 649u);
  EXPECT_EQ(gaplab::count_zeros(t, 10000), 10142u);
  EXPECT_THROW(gaplab::count_zeros(t, t.height() + 1), gaplab::HeightExceeded);
}

TEST(StandardTable, CountIsMonotone) {
  const auto& t = standard_table();
  std::size_t prev = 0;
  for (double T = 10; T <= t.height(); T += 7.3) {
    const auto n = gaplab::count_zeros(t, T);
    ASSERT_GE(n, prev) << T;
    prev = n;
  }
}

TEST(StandardTable, CountBelowUpperBound) {
  const auto& t = standard_table();
  for (int i = 1; i <= 200; ++i) {
    const double T = 15 + (t.height() - 15) * i / 200;
    ASSERT_LT(static_cast<double>(gaplab::count_zeros(t, T)), gaplab::n_upper(T)) << T;
  }
}

TEST(WindowCheck, Boundaries) {
  const auto& t = standard_table();
  const auto w = gaplab::window_count_check(t, 51);
  EXPECT_TRUE(w.ok);
  EXPECT_DOUBLE_EQ(w.bound, std::log(51.0));
  EXPECT_THROW(gaplab::window_count_check(t, 50), gaplab::DomainError);
  EXPECT_THROW(gaplab::window_count_check(t, t.height()), gaplab::DomainError);
}

TEST(WindowCheck, SweepOverTable) {
  const auto& t = standard_table();
  const double t_max = std::min(t.height() - 1, 250000.0);
  for (double s = 51; s <= t_max; s += 1) {
    const auto w = gaplab::window_count_check(t, s);
    ASSERT_TRUE(w.ok) << "t = " << s << " count " << w.count;
  }
}

TEST(WindowCheck, CountsOpenWindow) {
  const auto& t = standard_table();
  const auto ords = t.ordinates();
  std::size_t brute = 0;
  for (double g : ords) brute += (g > 99 && g < 101);
  EXPECT_EQ(gaplab::window_count_check(t, 100).count, brute);
}

}  // namespace
