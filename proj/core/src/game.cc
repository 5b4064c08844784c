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

#include "anongame/game.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "anongame/distributions.h"

namespace anongame {
namespace {

// Dense tables beyond this many entries are refused outright.
constexpr std::uint64_t kMaxTableEntries = 1ULL << 28;

std::uint64_t CheckedTableSize(int n, int s) {
  if (n < 2) throw std::invalid_argument("an anonymous game needs n >= 2");
  if (s < 2) throw std::invalid_argument("an anonymous game needs s >= 2");
  const std::uint64_t per_table = NumPartitions(n - 1, s);
  const std::uint64_t tables = static_cast<std::uint64_t>(n) * s;
  if (per_table > kMaxTableEntries / tables) {
    throw std::invalid_argument("utility table too large");
  }
  return per_table;
}

}  // namespace

AnonymousGame::AnonymousGame(int num_players, int num_strategies,
                             std::vector<double> utilities,
                             std::optional<double> declared_lambda)
    : num_players_(num_players),
      num_strategies_(num_strategies),
      table_size_(CheckedTableSize(num_players, num_strategies)),
      utilities_(std::move(utilities)),
      declared_lambda_(declared_lambda) {
  const std::uint64_t expected =
      static_cast<std::uint64_t>(num_players_) * num_strategies_ * table_size_;
  if (utilities_.size() != expected) {
    throw std::invalid_argument(
        "utility table has " + std::to_string(utilities_.size()) +
        " entries, expected " + std::to_string(expected));
  }
  for (double u : utilities_) {
    if (!(u >= 0.0 && u <= 1.0)) {
      throw std::invalid_argument("utility outside [0, 1]: " +
                                  std::to_string(u));
    }
  }
  if (declared_lambda_ && !(*declared_lambda_ >= 0.0)) {
    throw std::invalid_argument("declared lambda must be nonnegative");
  }
}

AnonymousGame AnonymousGame::FromFunction(int num_players, int num_strategies,
                                          const UtilityFn& fn) {
  const std::uint64_t per_table =
      CheckedTableSize(num_players, num_strategies);
  std::vector<double> utilities;
  utilities.reserve(per_table * num_players * num_strategies);
  for (int p = 0; p < num_players; ++p) {
    for (int i = 0; i < num_strategies; ++i) {
      Partition x = Partition::First(num_players - 1, num_strategies);
      do {
        utilities.push_back(fn(p, i, x));
      } while (x.Advance());
    }
  }
  return AnonymousGame(num_players, num_strategies, std::move(utilities));
}

MixedProfile::MixedProfile(std::vector<std::vector<double>> probs)
    : probs_(std::move(probs)) {
  for (const auto& row : probs_) {
    if (row.size() != probs_[0].size() || row.size() < 2) {
      throw std::invalid_argument("mixed profile rows have unequal length");
    }
    double sum = 0.0;
    for (double v : row) {
      if (!(v >= 0.0)) throw std::invalid_argument("negative probability");
      sum += v;
    }
    if (std::abs(sum - 1.0) > kExactTolerance) {
      throw std::invalid_argument("mixed strategy does not sum to 1");
    }
  }
}

MixedProfile MixedProfile::FromBinary(
    std::span<const double> strategy_one_probs) {
  std::vector<std::vector<double>> rows;
  rows.reserve(strategy_one_probs.size());
  for (double p : strategy_one_probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("probability outside [0, 1]");
    }
    rows.push_back({1.0 - p, p});
  }
  return MixedProfile(std::move(rows));
}

MixedProfile MixedProfile::FromPure(const PureProfile& profile,
                                    int num_strategies) {
  std::vector<std::vector<double>> rows;
  for (int c : profile.choices) {
    std::vector<double> row(num_strategies, 0.0);
    row.at(c) = 1.0;
    rows.push_back(std::move(row));
  }
  return MixedProfile(std::move(rows));
}

std::vector<double> MixedProfile::StrategyOneProbabilities() const {
  std::vector<double> out;
  out.reserve(probs_.size());
  for (const auto& row : probs_) out.push_back(row[1]);
  return out;
}

void ValidateProfile(const AnonymousGame& game, const PureProfile& profile) {
  if (profile.num_players() != game.num_players()) {
    throw std::invalid_argument("profile length does not match the game");
  }
  for (int c : profile.choices) {
    if (c < 0 || c >= game.num_strategies()) {
      throw std::invalid_argument("strategy index out of range: " +
                                  std::to_string(c));
    }
  }
}

Partition PartitionExcluding(const PureProfile& profile, int player,
                             int num_strategies) {
  std::vector<int> counts(num_strategies, 0);
  for (int q = 0; q < profile.num_players(); ++q) {
    if (q != player) ++counts.at(profile.choices[q]);
  }
  return Partition(std::move(counts));
}

RegretReport PureRegret(const AnonymousGame& game,
                        const PureProfile& profile) {
  ValidateProfile(game, profile);
  const int n = game.num_players();
  const int s = game.num_strategies();
  // x[S, p] differs from the full count vector only in p's own bin.
  std::vector<int> full(s, 0);
  for (int c : profile.choices) ++full[c];

  RegretReport report;
  report.per_player.resize(n);
  for (int p = 0; p < n; ++p) {
    std::vector<int> others = full;
    --others[profile.choices[p]];
    const std::uint64_t rank = Partition(std::move(others)).Rank();
    double best = 0.0;
    for (int i = 0; i < s; ++i) best = std::max(best, game.Utility(p, i, rank));
    const double regret = best - game.Utility(p, profile.choices[p], rank);
    report.per_player[p] = regret;
    report.max_regret = std::max(report.max_regret, regret);
  }
  return report;
}

namespace {

// Max over players, strategies and adjacent partition pairs of
// |u(x) - u(y)|.
double MaxAdjacentJump(const AnonymousGame& game) {
  const int n = game.num_players();
  const int s = game.num_strategies();
  double worst = 0.0;
  Partition x = Partition::First(n - 1, s);
  do {
    const std::uint64_t rx = x.Rank();
    for (int from = 0; from < s; ++from) {
      if (x[from] == 0) continue;
      const Partition without = x.WithRemoved(from);
      // Ordered pairs (from, to) with to > from cover each unordered pair
      // once from one of its endpoints.
      for (int to = 0; to < s; ++to) {
        if (to == from) continue;
        const std::uint64_t ry = without.WithAdded(to).Rank();
        if (ry < rx) continue;
        for (int p = 0; p < n; ++p) {
          for (int i = 0; i < s; ++i) {
            worst = std::max(worst, std::abs(game.Utility(p, i, rx) -
                                             game.Utility(p, i, ry)));
          }
        }
      }
    }
  } while (x.Advance());
  return worst;
}

}  // namespace

double LipschitzConstant(const AnonymousGame& game) {
  return MaxAdjacentJump(game) / 2.0;
}

bool SatisfiesLipschitz(const AnonymousGame& game, double lambda) {
  return MaxAdjacentJump(game) <= 2.0 * lambda + kExactTolerance;
}

double ExpectedUtilityBinary(const AnonymousGame& game, int player,
                             int strategy,
                             std::span<const double> others_on_one) {
  if (game.num_strategies() != 2) {
    throw std::invalid_argument("binary expected utility needs s = 2");
  }
  const std::span<const double> table = game.Table(player, strategy);
  const std::size_t len = std::min(table.size(), others_on_one.size());
  long double sum = 0.0L;
  for (std::size_t l = 0; l < len; ++l) {
    sum += static_cast<long double>(others_on_one[l]) * table[l];
  }
  return static_cast<double>(sum);
}

RegretReport MixedRegretBinary(const AnonymousGame& game,
                               std::span<const double> strategy_one_probs) {
  if (game.num_strategies() != 2) {
    throw std::invalid_argument("mixed regret is implemented for s = 2 only");
  }
  const int n = game.num_players();
  if (static_cast<int>(strategy_one_probs.size()) != n) {
    throw std::invalid_argument("mixed profile length does not match game");
  }
  RegretReport report;
  report.per_player.resize(n);
  std::vector<double> others;
  others.reserve(n - 1);
  for (int p = 0; p < n; ++p) {
    others.clear();
    for (int q = 0; q < n; ++q) {
      if (q != p) others.push_back(strategy_one_probs[q]);
    }
    const DiscreteDistribution dist = PoissonBinomial(others);
    const double e0 = ExpectedUtilityBinary(game, p, 0, dist.pmf);
    const double e1 = ExpectedUtilityBinary(game, p, 1, dist.pmf);
    const double mine = strategy_one_probs[p];
    const double played = (1.0 - mine) * e0 + mine * e1;
    const double regret = std::max(0.0, std::max(e0, e1) - played);
    report.per_player[p] = regret;
    report.max_regret = std::max(report.max_regret, regret);
  }
  return report;
}

}  // namespace anongame
