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

#ifndef ANONGAME_SOLVE_PURE_H_
#define ANONGAME_SOLVE_PURE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anongame/assignment.h"
#include "anongame/game.h"
#include "anongame/partition.h"

namespace anongame {

// 4 (D + s + 1) lambda with D = 2s^2 + 2s, i.e. 4 (2s^2 + 3s + 1) lambda: the
// regret at which an approximate pure equilibrium is guaranteed to exist.
double PureEquilibriumBound(int num_strategies, double lambda);

// Assignment problem for realizing the aggregate `counts` (a partition of
// all n players): player p may take strategy i when x_i >= 1, at cost equal
// to p's regret for i against x - e_i.
AssignmentProblem BuildRealizationProblem(const AnonymousGame& game,
                                          const Partition& counts);

// A profile realizing `counts` in which every player's regret is <= eps, or
// nullopt. Such a profile exists iff the assignment problem is feasible.
std::optional<PureProfile> FeasibleProfileAt(const AnonymousGame& game,
                                             const Partition& counts,
                                             double eps);

struct MinimumThreshold {
  double threshold = 0.0;
  PureProfile profile;
  std::uint64_t rank = 0;  // rank of the realizing partition
};

// Smallest eps at which some partition is feasible, equal to the minimum
// max-regret over all pure profiles. Ties resolve to the lowest rank.
MinimumThreshold FindMinimumThreshold(const AnonymousGame& game,
                                      int threads = 0);

struct PureSolveOptions {
  // nullopt selects the guaranteed threshold PureEquilibriumBound(s, lambda).
  std::optional<double> eps;
  // Also report the minimum feasible threshold.
  bool min_eps = false;
  int threads = 0;
};

struct PureSolveReport {
  std::optional<PureProfile> profile;
  double max_regret = 0.0;
  std::vector<double> per_player;
  double lambda = 0.0;
  double theoretical_bound = 0.0;
  double feasibility_threshold = 0.0;
  bool auto_threshold = false;
  std::uint64_t partitions_examined = 0;
  std::uint64_t partitions_total = 0;
  std::optional<MinimumThreshold> minimum;

  // "ok" or "no_profile_at_threshold".
  std::string status() const {
    return profile ? "ok" : "no_profile_at_threshold";
  }
};

// Scans partitions of n in rank order and returns the first one realizable
// under the threshold, verified by PureRegret.
PureSolveReport SolvePure(const AnonymousGame& game,
                          const PureSolveOptions& options = {});

// Random game whose Lipschitz constant is at most lambda_target. Each
// utility table is a sum of per-bin random walks (steps uniform in
// [-lambda, lambda]), shifted and if necessary scaled into [0, 1].
// Deterministic in `seed`.
AnonymousGame GenerateLipschitzGame(int num_players, int num_strategies,
                                    double lambda_target, std::uint64_t seed);

}  // namespace anongame

#endif  // ANONGAME_SOLVE_PURE_H_
