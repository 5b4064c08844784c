// Copyright 2026 The anongame Authors
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

#include "anongame/harness.h"

#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "test_games.h"

namespace anongame {
namespace {

TEST(BruteForceTest, Examples) {
  EXPECT_EQ(BruteForceMinRegret(testing::ConstantGame(4, 3)), 0.0);
  EXPECT_EQ(BruteForceMinRegret(testing::MatchingPennies()), 1.0);
  EXPECT_NEAR(BruteForceMinRegret(testing::DominantGame(5, 3, 2, 0.3)), 0.0,
              kExactTolerance);
  EXPECT_THROW(BruteForceMinRegret(testing::ConstantGame(10, 3), 1000),
               std::invalid_argument);
}

TEST(ExactTvTest, Examples) {
  const std::vector<double> gridded = {0.1, 0.0, 0.7, 1.0, 0.5};
  const TvPair same = ExactTvAfterRounding(gridded, {.k = 10});
  EXPECT_EQ(same.full, 0.0);
  EXPECT_EQ(same.leave_one_out_max, 0.0);

  const TvPair small =
      ExactTvAfterRounding(std::vector<double>(100, 0.01), {.k = 10});
  EXPECT_LE(small.full, 0.2);
  EXPECT_LE(small.leave_one_out_max, 0.2);

  const TvPair one = ExactTvAfterRounding(std::vector<double>{0.33}, {.k = 4});
  EXPECT_GT(one.full, 0.0);
  EXPECT_EQ(one.leave_one_out_max, 0.0);
  EXPECT_THROW(ExactTvBetween(std::vector<double>{0.1},
                              std::vector<double>{0.1, 0.2}),
               std::invalid_argument);
}

TEST(GeneratorsTest, RandomMeansStayInRange) {
  std::mt19937_64 rng(1);
  for (double v : RandomMeans(rng, 1000)) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(GeneratorsTest, GridEquilibriumGameHasItsEquilibrium) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + t % 7;
    const int k = 4 + t % 7;
    std::vector<int> levels(n);
    std::vector<double> probs(n);
    for (int p = 0; p < n; ++p) {
      levels[p] = static_cast<int>(rng() % (k + 1));
      probs[p] = static_cast<double>(levels[p]) / k;
    }
    const AnonymousGame g = GridEquilibriumGame(rng, levels, k);
    EXPECT_LE(MixedRegretBinary(g, probs).max_regret, 1e-12);
  }
}

TEST(OracleReportTest, PassRule) {
  EXPECT_TRUE(OracleReport::Make("c", "i", 1.0, 1.0, 0.0).pass);
  EXPECT_FALSE(OracleReport::Make("c", "i", 1.0, 1.0, -1e-12).pass);
  EXPECT_TRUE(OracleReport::Make("c", "i", 1.0 + 1e-13, 1.0, 1e-12).pass);
  SuiteResult suite{"s", {OracleReport::Make("c", "i", 0.0, 1.0, 0.0)}, 0.0};
  suite.items.push_back(OracleReport::Diagnostic("d", "i", 2.0, 1.0));
  EXPECT_TRUE(suite.passed());
  EXPECT_FALSE(ToJson(suite)["items"][1]["gating"].get<bool>());
  suite.items.push_back(OracleReport::Make("c", "i", 2.0, 1.0, 0.0));
  EXPECT_FALSE(suite.passed());
}

TEST(SuiteTest, NamesAndDispatch) {
  for (const std::string& name : SuiteNames()) EXPECT_FALSE(name.empty());
  EXPECT_THROW(RunSuite("nope", 0), std::invalid_argument);
  const auto results = RunSuite("naive-counterexample", 0);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_TRUE(results[0].passed());
  EXPECT_NEAR(results[0].items[1].measured, 0.633968, 1e-6);
}

TEST(SuiteTest, DeterministicUnderSeed) {
  const auto a = RunSuite("oracle-equivalence", 3);
  const auto b = RunSuite("oracle-equivalence", 3);
  ASSERT_EQ(a[0].items.size(), b[0].items.size());
  for (std::size_t i = 0; i < a[0].items.size(); ++i) {
    if (a[0].items[i].claim.find("runtime") != std::string::npos) continue;
    EXPECT_EQ(a[0].items[i].measured, b[0].items[i].measured);
  }
}

}  // namespace
}  // namespace anongame
