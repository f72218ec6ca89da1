/*
 * Copyright 2026 The sttmrec Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "sttmrec/common/config.h"
#include "sttmrec/common/csv.h"
#include "sttmrec/common/error.h"
#include "sttmrec/common/math_util.h"
#include "sttmrec/common/random.h"

namespace sttmrec {
namespace {

double RisingByProduct(double x, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += std::log(x + i);
  return s;
}

TEST(MathUtilTest, LogRisingFactorialMatchesProduct) {
  for (double x : {0.01, 0.1, 1.0, 3.5, 250.0}) {
    for (int n : {0, 1, 2, 7, 64, 65, 300}) {
      EXPECT_NEAR(LogRisingFactorial(x, n), RisingByProduct(x, n),
                  1e-9 * (1.0 + std::abs(RisingByProduct(x, n))))
          << "x=" << x << " n=" << n;
    }
  }
}

TEST(MathUtilTest, LogSumExpAndNormalize) {
  std::vector<double> v = {std::log(1.0), std::log(3.0)};
  EXPECT_NEAR(LogSumExp(v), std::log(4.0), 1e-12);
  NormalizeLogWeights(v);
  EXPECT_NEAR(v[0], 0.25, 1e-12);
  EXPECT_NEAR(v[1], 0.75, 1e-12);
}

TEST(MathUtilTest, TotalVariation) {
  std::vector<double> p = {0.5, 0.5, 0.0};
  std::vector<double> q = {0.0, 0.5, 0.5};
  EXPECT_DOUBLE_EQ(TotalVariation(p, q), 0.5);
  EXPECT_DOUBLE_EQ(TotalVariation(p, p), 0.0);
}

TEST(MathUtilTest, Fnv1aKnownVectors) {
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(RandomTest, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.UniformInt(1000), b.UniformInt(1000));
}

TEST(RandomTest, CategoricalRespectsZeroWeights) {
  Rng rng(7);
  std::vector<double> w = {0.0, 1.0, 0.0};
  for (int i = 0; i < 50; ++i) EXPECT_EQ(rng.Categorical(w), 1);
}

TEST(RandomTest, UniformInUnitInterval) {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.Uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(CsvTest, QuotedFieldsRoundTrip) {
  std::ostringstream out;
  WriteCsvRow(out, {"a,b", "say \"hi\"", "plain", "multi\nline"});
  const auto rows = ParseCsv(out.str(), "mem");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].fields,
            (std::vector<std::string>{"a,b", "say \"hi\"", "plain",
                                      "multi\nline"}));
}

TEST(CsvTest, SkipsBlankLinesAndTracksLineNumbers) {
  const auto rows = ParseCsv("x,y\n\n1,2\n", "mem");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].line, 3);
}

TEST(CsvTest, UnterminatedQuoteThrows) {
  EXPECT_THROW(ParseCsv("a,\"b\n", "mem"), InputError);
}

TEST(CsvTest, MissingFileNamesPath) {
  try {
    ReadFileOrThrow("/nonexistent/file.csv");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/file.csv"),
              std::string::npos);
  }
}

TEST(ConfigTest, ParsesSectionsCommentsAndQuotes) {
  const auto c = Config::Parse(
      "# comment\nseed = 5\n[sttm]\nstates=3\nname = \"a b\"\n", "mem");
  EXPECT_EQ(c.GetInt("seed", 0), 5);
  EXPECT_EQ(c.GetInt("sttm.states", 0), 3);
  EXPECT_EQ(c.GetString("sttm.name", ""), "a b");
  EXPECT_EQ(c.GetInt("missing", 9), 9);
}

TEST(ConfigTest, ListsAndCanonicalOrder) {
  auto c = Config::Parse("b=1\na = x, y ,z\n", "mem");
  EXPECT_EQ(c.GetList("a", {}), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(c.Canonical(), "a=x, y ,z\nb=1\n");
}

TEST(ConfigTest, MalformedLineThrows) {
  EXPECT_THROW(Config::Parse("no equals sign\n", "mem"), InputError);
  auto c = Config::Parse("n=abc\n", "mem");
  EXPECT_THROW(c.GetInt("n", 0), InputError);
}

}  // namespace
}  // namespace sttmrec
