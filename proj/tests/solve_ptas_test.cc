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

#include "anongame/solve_ptas.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "anongame/harness.h"
#include "test_games.h"

namespace anongame {
namespace {

using testing::DominantGame;
using testing::MatchingPennies;

// Minimum exact regret over all (k + 1)^n grid profiles.
double GridMinimum(const AnonymousGame& game, int k) {
  const int n = game.num_players();
  std::vector<int> levels(n, 0);
  std::vector<double> probs(n, 0.0);
  double best = 1.0;
  while (true) {
    for (int p = 0; p < n; ++p) probs[p] = static_cast<double>(levels[p]) / k;
    best = std::min(best, MixedRegretBinary(game, probs).max_regret);
    int p = 0;
    while (p < n && ++levels[p] > k) levels[p++] = 0;
    if (p == n) break;
  }
  return best;
}

TEST(QuantizedGameTest, AllOthersAtLevelZero) {
  std::mt19937_64 rng(1);
  const AnonymousGame g = RandomBinaryGame(rng, 4);
  const int k = 5;
  const QuantizedGame q(g, k);
  const Partition others({3, 0, 0, 0, 0, 0});
  const DiscreteDistribution& law = q.OthersLaw(others);
  EXPECT_EQ(law.At(0), 1.0);
  EXPECT_EQ(law.Mass(), 1.0);
  for (int p = 0; p < 4; ++p) {
    for (int level = 0; level <= k; ++level) {
      const double expected = (1.0 - level / 5.0) * g.Utility(p, 0, 0) +
                              (level / 5.0) * g.Utility(p, 1, 0);
      EXPECT_NEAR(q.Payoff(p, level, others), expected, 1e-15);
    }
  }
}

TEST(QuantizedGameTest, RegretUsesTheBestLevel) {
  std::mt19937_64 rng(2);
  const AnonymousGame g = RandomBinaryGame(rng, 5);
  const int k = 6;
  const QuantizedGame q(g, k);
  Partition others = Partition::First(4, k + 1);
  do {
    for (int p = 0; p < 5; ++p) {
      double best = 0.0;
      for (int l = 0; l <= k; ++l) best = std::max(best, q.Payoff(p, l, others));
      for (int l = 0; l <= k; ++l) {
        EXPECT_NEAR(q.LevelRegret(p, l, others),
                    best - q.Payoff(p, l, others), 1e-14);
      }
    }
  } while (others.Advance());
  EXPECT_EQ(q.memo_size(), NumPartitions(4, k + 1));
  EXPECT_THROW(QuantizedGame(testing::ConstantGame(3, 3), 4),
               std::invalid_argument);
}

TEST(QuantizedGameTest, LinearityShortcutOnRandomProbes) {
  std::mt19937_64 rng(8);
  const int n = 6;
  const int k = 9;
  const AnonymousGame g = RandomBinaryGame(rng, n);
  const QuantizedGame q(g, k);
  for (int t = 0; t < 1000; ++t) {
    const Partition others =
        Partition::Unrank(rng() % NumPartitions(n - 1, k + 1), n - 1, k + 1);
    const int p = static_cast<int>(rng() % n);
    double best = 0.0;
    for (int l = 0; l <= k; ++l) best = std::max(best, q.Payoff(p, l, others));
    const double ends =
        std::max(q.Payoff(p, 0, others), q.Payoff(p, k, others));
    EXPECT_NEAR(best, ends, 1e-15);
    EXPECT_NEAR(best, q.PureExpectations(p, others).best(), 1e-15);
  }
}

TEST(QuantizedGameTest, UtilityShiftIsBoundedByLeaveOneOutTv) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + static_cast<int>(rng() % 30);
    const AnonymousGame g = RandomBinaryGame(rng, n);
    const std::vector<double> p = RandomMeans(rng, n);
    const RoundingResult r = RoundProbabilities(p, {.k = 16});
    for (int player = 0; player < n; ++player) {
      std::vector<double> p_others = p;
      std::vector<double> q_others = r.q;
      p_others.erase(p_others.begin() + player);
      q_others.erase(q_others.begin() + player);
      const DiscreteDistribution dp = PoissonBinomial(p_others);
      const DiscreteDistribution dq = PoissonBinomial(q_others);
      const double tv = TotalVariation(dp, dq);
      for (int m = 0; m < 2; ++m) {
        const double shift =
            std::abs(ExpectedUtilityBinary(g, player, m, dp.pmf) -
                     ExpectedUtilityBinary(g, player, m, dq.pmf));
        EXPECT_LE(shift, tv + 1e-15);
      }
    }
  }
}

TEST(SolvePtasTest, DominantStrategy) {
  // Level l costs (k - l) / k * 0.3, so only l = k fits under eps = 0.01.
  const PtasSolveReport r =
      SolvePtas(DominantGame(4, 2, 1, 0.3), {.eps = 0.01, .k = 6});
  EXPECT_EQ(r.levels, std::vector<int>(4, 6));
  EXPECT_EQ(r.exact_regret, 0.0);
  EXPECT_EQ(r.escalations, 0);
  EXPECT_EQ(r.threshold_used, 0.01);
}

TEST(SolvePtasTest, MatchingPenniesHalfIsTheOnlyZeroRegretPoint) {
  for (int k : {2, 4, 10}) {
    const PtasSolveReport r =
        SolvePtas(MatchingPennies(), {.k = k, .minimize = true});
    EXPECT_EQ(r.threshold_used, 0.0);
    EXPECT_EQ(r.levels, (std::vector<int>{k / 2, k / 2}));
    EXPECT_NEAR(r.exact_regret, 0.0, kExactTolerance);
  }
}

TEST(SolvePtasTest, MinimizedThresholdMatchesGridBruteForce) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 4; ++t) {
    const AnonymousGame g = RandomBinaryGame(rng, t < 2 ? 4 : 8);
    const int k = t < 2 ? 6 : 3;
    const PtasSolveReport r = SolvePtas(g, {.k = k, .minimize = true});
    EXPECT_NEAR(r.threshold_used, GridMinimum(g, k), 1e-12);
    EXPECT_LE(r.exact_regret, r.threshold_used + 1e-12);
  }
}

TEST(SolvePtasTest, FirstFeasibleCertificate) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    const AnonymousGame g = RandomBinaryGame(rng, 2 + t % 6);
    const PtasSolveReport r = SolvePtas(g, {.eps = 0.01, .k = 5});
    EXPECT_LE(r.exact_regret, r.threshold_used + 1e-9);
    EXPECT_DOUBLE_EQ(r.threshold_used, 0.01 * (1 << r.escalations));
  }
}

TEST(SolvePtasTest, BudgetGuardAndArguments) {
  std::mt19937_64 rng(5);
  const AnonymousGame g = RandomBinaryGame(rng, 8);
  EXPECT_THROW(SolvePtas(g, {.k = 10, .budget = 1000}),
               EnumerationBudgetExceeded);
  EXPECT_THROW(SolvePtas(g, {.eps = 0.0}), std::invalid_argument);
  EXPECT_THROW(SolvePtas(testing::ConstantGame(3, 3), {}),
               std::invalid_argument);
  EXPECT_EQ(ChooseGrid({.eps = 0.5}), 4);
  EXPECT_EQ(ChooseGrid({.eps = 0.01}), 64);
  EXPECT_EQ(ChooseGrid({.k = 7}), 7);
}

TEST(SolvePtasTest, DeterministicAcrossThreadCounts) {
  std::mt19937_64 rng(6);
  const AnonymousGame g = RandomBinaryGame(rng, 7);
  for (bool minimize : {false, true}) {
    const PtasSolveReport a =
        SolvePtas(g, {.eps = 0.02, .k = 6, .minimize = minimize, .threads = 1});
    const PtasSolveReport b =
        SolvePtas(g, {.eps = 0.02, .k = 6, .minimize = minimize, .threads = 4});
    EXPECT_EQ(a.levels, b.levels);
    EXPECT_EQ(a.exact_regret, b.exact_regret);
    EXPECT_EQ(a.partitions_examined, b.partitions_examined);
  }
}

TEST(RoundEquilibriumTest, GriddedInputIsUnchanged) {
  const std::vector<double> half = {0.5, 0.5};
  const RoundedEquilibrium r =
      RoundEquilibrium(MatchingPennies(), half, {.k = 10});
  EXPECT_EQ(r.report.mixed, half);
  EXPECT_NEAR(r.report.exact_regret, 0.0, kExactTolerance);
  EXPECT_NEAR(r.gap, 0.0, kExactTolerance);
}

TEST(RoundEquilibriumTest, SymmetricGameRegretMovesLittle) {
  // Everyone prefers strategy 1 exactly when fewer than half the others
  // play it; the symmetric equilibrium mixes.
  const int n = 50;
  const AnonymousGame g = AnonymousGame::FromFunction(
      n, 2, [n](int, int strategy, const Partition& x) {
        const double share = static_cast<double>(x[1]) / (n - 1);
        return strategy == 1 ? 1.0 - share : share;
      });
  std::mt19937_64 rng(7);
  std::vector<double> mixed(n);
  for (double& v : mixed) v = std::uniform_real_distribution<double>(0.3, 0.7)(rng);
  const RoundedEquilibrium r = RoundEquilibrium(g, mixed, {.k = 100});
  for (int i = 0; i < n; ++i) {
    EXPECT_LE(std::abs(r.report.mixed[i] - mixed[i]), 0.01 + 1e-12);
  }
  EXPECT_LE(std::abs(r.gap), 0.05);
}

}  // namespace
}  // namespace anongame
