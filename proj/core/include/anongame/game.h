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

#ifndef ANONGAME_GAME_H_
#define ANONGAME_GAME_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "anongame/partition.h"

namespace anongame {

// Absolute tolerance for equality checks on values in [0, 1].
inline constexpr double kExactTolerance = 1e-12;

// An anonymous game with n players and s strategies. Player p's utility for
// strategy i is a dense table over partitions of the other n - 1 players,
// indexed by Partition::Rank(). Immutable after construction.
class AnonymousGame {
 public:
  using UtilityFn = std::function<double(int player, int strategy,
                                         const Partition& others)>;

  // `utilities` is laid out as [player][strategy][rank]. Throws
  // std::invalid_argument on shape mismatch or values outside [0, 1].
  AnonymousGame(int num_players, int num_strategies,
                std::vector<double> utilities,
                std::optional<double> declared_lambda = std::nullopt);

  static AnonymousGame FromFunction(int num_players, int num_strategies,
                                    const UtilityFn& fn);

  int num_players() const { return num_players_; }
  int num_strategies() const { return num_strategies_; }
  // C(n - 1 + s - 1, s - 1).
  std::uint64_t table_size() const { return table_size_; }

  double Utility(int player, int strategy, std::uint64_t rank) const {
    return utilities_[Offset(player, strategy) + rank];
  }
  double Utility(int player, int strategy, const Partition& others) const {
    return Utility(player, strategy, others.Rank());
  }
  std::span<const double> Table(int player, int strategy) const {
    return {utilities_.data() + Offset(player, strategy), table_size_};
  }
  const std::vector<double>& utilities() const { return utilities_; }

  // Lipschitz constant supplied with the game, if any. Not trusted; see
  // VerifyDeclaredLipschitz.
  const std::optional<double>& declared_lambda() const {
    return declared_lambda_;
  }

 private:
  std::size_t Offset(int player, int strategy) const {
    return (static_cast<std::size_t>(player) * num_strategies_ + strategy) *
           table_size_;
  }

  int num_players_;
  int num_strategies_;
  std::uint64_t table_size_;
  std::vector<double> utilities_;
  std::optional<double> declared_lambda_;
};

// One strategy index (0-based) per player.
struct PureProfile {
  std::vector<int> choices;

  int num_players() const { return static_cast<int>(choices.size()); }
  friend bool operator==(const PureProfile&, const PureProfile&) = default;
};

// Per-player mixed strategies. For two-strategy games the convenient view is
// the probability of strategy 1 (strategies are 0-based), see
// FromBinary / StrategyOneProbabilities.
class MixedProfile {
 public:
  // Each row must be nonnegative and sum to 1 within 1e-12.
  explicit MixedProfile(std::vector<std::vector<double>> probs);
  static MixedProfile FromBinary(std::span<const double> strategy_one_probs);
  static MixedProfile FromPure(const PureProfile& profile, int num_strategies);

  int num_players() const { return static_cast<int>(probs_.size()); }
  int num_strategies() const {
    return probs_.empty() ? 0 : static_cast<int>(probs_[0].size());
  }
  std::span<const double> Distribution(int player) const {
    return probs_[player];
  }
  std::vector<double> StrategyOneProbabilities() const;

 private:
  std::vector<std::vector<double>> probs_;
};

struct RegretReport {
  double max_regret = 0.0;
  std::vector<double> per_player;
};

// Throws std::invalid_argument unless the profile has one valid strategy per
// player of `game`.
void ValidateProfile(const AnonymousGame& game, const PureProfile& profile);

// Counts of the strategies chosen by everyone except `player`.
Partition PartitionExcluding(const PureProfile& profile, int player,
                             int num_strategies);

RegretReport PureRegret(const AnonymousGame& game, const PureProfile& profile);

// Smallest lambda with |u(x) - u(y)| <= lambda * ||x - y||_1 for all
// partitions x, y. Adjacent pairs (one unit moved between two bins) suffice
// since every pair is joined by a path of adjacent steps.
double LipschitzConstant(const AnonymousGame& game);

// True when `lambda` bounds every adjacent-pair difference (within 1e-12).
bool SatisfiesLipschitz(const AnonymousGame& game, double lambda);

// Expected utility of pure strategy `strategy` for `player` when the number
// of other players on strategy 1 is distributed as `others_on_one`, given as
// a pmf over 0..n-1 (shorter vectors are zero padded). Two-strategy games
// only.
double ExpectedUtilityBinary(const AnonymousGame& game, int player,
                             int strategy,
                             std::span<const double> others_on_one);

// Exact regrets of a mixed profile in a two-strategy game. Each player's
// opponents are summarized by the Poisson binomial law of how many of them
// play strategy 1. Throws std::invalid_argument if s != 2.
RegretReport MixedRegretBinary(const AnonymousGame& game,
                               std::span<const double> strategy_one_probs);

}  // namespace anongame

#endif  // ANONGAME_GAME_H_
