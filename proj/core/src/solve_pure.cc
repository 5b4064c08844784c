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

#include "anongame/solve_pure.h"

#include <algorithm>
#include <limits>
#include <mutex>
#include <random>
#include <stdexcept>

#include "anongame/parallel_scan.h"

namespace anongame {

double PureEquilibriumBound(int num_strategies, double lambda) {
  const double s = num_strategies;
  return 4.0 * (2.0 * s * s + 3.0 * s + 1.0) * lambda;
}

AssignmentProblem BuildRealizationProblem(const AnonymousGame& game,
                                          const Partition& counts) {
  const int n = game.num_players();
  const int s = game.num_strategies();
  if (counts.total() != n || counts.num_parts() != s) {
    throw std::invalid_argument("counts must split all n players over s bins");
  }
  AssignmentProblem problem(n, counts.counts());
  for (int i = 0; i < s; ++i) {
    if (counts[i] == 0) continue;
    const std::uint64_t rank = counts.WithRemoved(i).Rank();
    for (int p = 0; p < n; ++p) {
      double best = 0.0;
      for (int j = 0; j < s; ++j) {
        best = std::max(best, game.Utility(p, j, rank));
      }
      problem.SetCost(p, i, best - game.Utility(p, i, rank));
    }
  }
  return problem;
}

std::optional<PureProfile> FeasibleProfileAt(const AnonymousGame& game,
                                             const Partition& counts,
                                             double eps) {
  auto assignment = BuildRealizationProblem(game, counts).Solve(eps);
  if (!assignment) return std::nullopt;
  return PureProfile{std::move(*assignment)};
}

MinimumThreshold FindMinimumThreshold(const AnonymousGame& game,
                                      int threads) {
  std::mutex mu;
  std::optional<MinimumThreshold> best;
  ForEachPartition(
      game.num_players(), game.num_strategies(), threads,
      [&](const Partition& x, std::uint64_t rank) {
        std::optional<double> ceiling;
        {
          std::lock_guard<std::mutex> lock(mu);
          if (best) ceiling = best->threshold;
        }
        auto found = BuildRealizationProblem(game, x).SolveBottleneck(ceiling);
        if (!found) return;
        std::lock_guard<std::mutex> lock(mu);
        if (!best || found->threshold < best->threshold ||
            (found->threshold == best->threshold && rank < best->rank)) {
          best = MinimumThreshold{found->threshold,
                                  PureProfile{std::move(found->assignment)},
                                  rank};
        }
      });
  if (!best) throw std::logic_error("no partition is realizable");
  return *best;
}

PureSolveReport SolvePure(const AnonymousGame& game,
                          const PureSolveOptions& options) {
  const int n = game.num_players();
  const int s = game.num_strategies();
  PureSolveReport report;
  report.lambda = LipschitzConstant(game);
  report.theoretical_bound = PureEquilibriumBound(s, report.lambda);
  report.auto_threshold = !options.eps.has_value();
  report.feasibility_threshold =
      options.eps ? *options.eps : report.theoretical_bound;
  report.partitions_total = NumPartitions(n, s);

  const double threshold = report.feasibility_threshold;
  auto hit = FirstInRankOrder<PureProfile>(
      n, s, options.threads, [&](const Partition& x) {
        return FeasibleProfileAt(game, x, threshold);
      });
  if (hit) {
    report.partitions_examined = hit->rank + 1;
    const RegretReport regret = PureRegret(game, hit->value);
    if (regret.max_regret > threshold + kExactTolerance) {
      throw std::logic_error("realized profile exceeds the threshold");
    }
    report.profile = std::move(hit->value);
    report.max_regret = regret.max_regret;
    report.per_player = regret.per_player;
  } else {
    report.partitions_examined = report.partitions_total;
  }
  if (options.min_eps) {
    report.minimum = FindMinimumThreshold(game, options.threads);
  }
  return report;
}

AnonymousGame GenerateLipschitzGame(int num_players, int num_strategies,
                                    double lambda_target,
                                    std::uint64_t seed) {
  if (!(lambda_target >= 0.0)) {
    throw std::invalid_argument("lambda_target must be nonnegative");
  }
  const int n = num_players;
  const int s = num_strategies;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> step(-lambda_target, lambda_target);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const std::uint64_t per_table = NumPartitions(n - 1, s);
  std::vector<double> utilities;
  utilities.reserve(per_table * n * s);
  std::vector<double> table(per_table);
  std::vector<std::vector<double>> walks(s, std::vector<double>(n, 0.0));
  for (int p = 0; p < n; ++p) {
    for (int i = 0; i < s; ++i) {
      for (auto& walk : walks) {
        for (int v = 1; v < n; ++v) walk[v] = walk[v - 1] + step(rng);
      }
      Partition x = Partition::First(n - 1, s);
      std::size_t r = 0;
      do {
        double v = 0.0;
        for (int t = 0; t < s; ++t) v += walks[t][x[t]];
        table[r++] = v;
      } while (x.Advance());
      const auto [lo_it, hi_it] = std::minmax_element(table.begin(), table.end());
      const double lo = *lo_it;
      const double range = *hi_it - lo;
      // Scaling by <= 1 keeps every adjacent difference within bounds.
      const double scale = range > 1.0 ? 1.0 / range : 1.0;
      const double shift = unit(rng) * (1.0 - range * scale);
      for (double v : table) {
        utilities.push_back(std::clamp((v - lo) * scale + shift, 0.0, 1.0));
      }
    }
  }
  return AnonymousGame(n, s, std::move(utilities));
}

}  // namespace anongame
