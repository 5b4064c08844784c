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

#ifndef ANONGAME_SOLVE_PTAS_H_
#define ANONGAME_SOLVE_PTAS_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "anongame/assignment.h"
#include "anongame/distributions.h"
#include "anongame/game.h"
#include "anongame/partition.h"
#include "anongame/rounding.h"

namespace anongame {

// The (k + 1)-strategy game induced by a two-strategy game when every player
// is restricted to playing strategy 1 with probability level / k. Payoffs are
// exact expectations under the quantized opponents, computed by the Poisson
// binomial DP and memoized per opponent multiset. Thread safe.
class QuantizedGame {
 public:
  // `base` must outlive this object and have s = 2.
  QuantizedGame(const AnonymousGame& base, int k);

  const AnonymousGame& base() const { return base_; }
  int k() const { return k_; }
  int num_levels() const { return k_ + 1; }

  // Expected utilities of the two original pure strategies for `player`
  // when the other n - 1 players are spread over levels as `others`.
  struct Expectations {
    double strategy0 = 0.0;
    double strategy1 = 0.0;
    double best() const { return std::max(strategy0, strategy1); }
  };
  Expectations PureExpectations(int player, const Partition& others) const;

  // Payoff of playing `level`: (1 - level/k) E[u_0] + (level/k) E[u_1].
  double Payoff(int player, int level, const Partition& others) const;

  // max over levels of Payoff minus Payoff(level). The max over levels is
  // attained at level 0 or k since Payoff is linear in level.
  double LevelRegret(int player, int level, const Partition& others) const;

  // Law of the number of opponents on strategy 1.
  const DiscreteDistribution& OthersLaw(const Partition& others) const;

  std::size_t memo_size() const;

 private:
  struct Entry {
    DiscreteDistribution law;
    std::vector<double> e0;  // per player
    std::vector<double> e1;
  };
  const Entry& Lookup(const Partition& others) const;

  const AnonymousGame& base_;
  int k_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<std::uint64_t, std::unique_ptr<const Entry>>
      memo_;
};

// Assignment problem realizing the level counts `counts` (a partition of all
// n players over k + 1 levels), with cost = LevelRegret against counts - e_i.
AssignmentProblem BuildQuantizedProblem(const QuantizedGame& game,
                                        const Partition& counts);

class EnumerationBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PtasOptions {
  double eps = 0.1;
  // Grid denominator; when absent k = min(ceil(c_k / eps^2), k_cap).
  std::optional<int> k;
  double c_k = 1.0;
  int k_cap = 64;
  // Refuse when C(n + k, k) partitions exceed this.
  std::uint64_t budget = 20'000'000;
  // Search for the smallest feasible threshold instead of stopping at the
  // first feasible doubling step.
  bool minimize = false;
  int threads = 0;
};

struct PtasSolveReport {
  std::vector<double> mixed;  // probability of strategy 1, multiples of 1/k
  std::vector<int> levels;
  double exact_regret = 0.0;
  std::vector<double> per_player;
  int k_used = 0;
  double threshold_used = 0.0;
  // First threshold of the doubling sequence eps, 2 eps, ... that admits a
  // profile.
  double first_feasible_threshold = 0.0;
  int escalations = 0;
  std::uint64_t partitions_examined = 0;
  std::uint64_t partitions_total = 0;
};

int ChooseGrid(const PtasOptions& options);

// Throws std::invalid_argument unless s = 2 and eps in (0, 1);
// EnumerationBudgetExceeded when the partition count is over budget.
PtasSolveReport SolvePtas(const AnonymousGame& game,
                          const PtasOptions& options);

struct RoundedEquilibrium {
  PtasSolveReport report;  // profile q with its exact regret
  RoundingResult rounding;
  double input_regret = 0.0;
  // exact_regret(q) - exact_regret(input).
  double gap = 0.0;
};

// Rounds a mixed profile (probabilities of strategy 1) to the 1/k grid and
// reports how much the exact regret moved.
RoundedEquilibrium RoundEquilibrium(const AnonymousGame& game,
                                    std::span<const double> mixed,
                                    const RoundingConfig& config);

}  // namespace anongame

#endif  // ANONGAME_SOLVE_PTAS_H_
