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

#include <charconv>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gaplab/report.hpp"

namespace {

using gaplab::CsvRow;
using gaplab::RunReport;
using gaplab::Verdict;

TEST(RunReport, VerdictFollowsTolerance) {
  RunReport r;
  r.expectation = gaplab::Expectation{33.217, 0.01};
  r.judge(33.21);
  EXPECT_EQ(r.verdict, Verdict::pass);
  r.judge(33.2271);
  EXPECT_EQ(r.verdict, Verdict::fail);
  r.judge(33.227);
  EXPECT_EQ(r.verdict, std::fabs(33.227 - 33.217) <= 0.01 ? Verdict::pass : Verdict::fail);
  RunReport none;
  none.judge(1);
  EXPECT_EQ(none.verdict, Verdict::not_applicable);
  EXPECT_STREQ(gaplab::to_string(Verdict::not_applicable), "n/a");
}

TEST(FormatDouble, RoundTrips) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    const double v = std::ldexp(static_cast<double>(rng() >> 11), static_cast<int>(rng() % 200) - 100);
    const auto s = gaplab::format_double(v);
    double back = 0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    ASSERT_EQ(back, v) << s;
  }
  EXPECT_EQ(gaplab::format_sig(7.832014180505469, 12), "7.83201418051");
}

TEST(Csv, RoundTripsAwkwardFields) {
  const std::vector<CsvRow> rows = {
      {"plain", "with,comma", "with \"quotes\"", ""},
      {"multi\nline", "crlf\r\nend", "trailing ", " leading"},
      {""},
      {"a", "b", "c", "d"},
  };
  std::ostringstream out;
  for (const auto& r : rows) gaplab::write_csv_row(out, r);
  std::istringstream in(out.str());
  EXPECT_EQ(gaplab::read_csv(in), rows);
}

TEST(Csv, ReportRowRoundTrips) {
  RunReport r;
  r.command = "tables --which L";
  r.inputs = {{"L", "2"}, {"c_ford", "57.54"}};
  r.outputs = {{"k", "0.905"}, {"y0", "1.1e10"}};
  r.expectation = gaplab::Expectation{22.19, 0.05};
  r.note = "rounded, \"one figure\"";
  r.judge(22.039049);
  std::ostringstream out;
  gaplab::write_csv_row(out, gaplab::report_csv_header());
  gaplab::write_csv_row(out, gaplab::to_csv_row(r));
  std::istringstream in(out.str());
  const auto parsed = gaplab::read_csv(in);
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed[0], gaplab::report_csv_header());
  EXPECT_EQ(parsed[1], gaplab::to_csv_row(r));
  EXPECT_EQ(parsed[1][6], "fail");
  EXPECT_EQ(parsed[1][5], "22.039049");
}

TEST(Csv, AcceptsBareLf) {
  std::istringstream in("a,b\n1,2\n");
  const auto rows = gaplab::read_csv(in);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1], (CsvRow{"1", "2"}));
}

TEST(Csv, RejectsMalformedQuotes) {
  std::istringstream open("\"never closed\n");
  EXPECT_THROW(gaplab::read_csv(open), gaplab::ParseError);
  std::istringstream stray("ab\"c\n");
  EXPECT_THROW(gaplab::read_csv(stray), gaplab::ParseError);
}

}  // namespace
