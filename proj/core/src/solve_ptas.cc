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
#include <mutex>
#include <string>

#include "anongame/parallel_scan.h"

namespace anongame {

QuantizedGame::QuantizedGame(const AnonymousGame& base, int k)
    : base_(base), k_(k) {
  if (base.num_strategies() != 2) {
    throw std::invalid_argument("quantized games need a two-strategy base");
  }
  if (k < 1) throw std::invalid_argument("grid denominator must be >= 1");
}

const QuantizedGame::Entry& QuantizedGame::Lookup(
    const Partition& others) const {
  const std::uint64_t key = others.Rank();
  {
    std::shared_lock lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return *it->second;
  }
  // Computed outside the lock; a racing duplicate computes the same value.
  std::vector<double> probs;
  probs.reserve(others.total());
  for (int level = 0; level <= k_; ++level) {
    probs.insert(probs.end(), others[level],
                 static_cast<double>(level) / k_);
  }
  auto entry = std::make_unique<Entry>();
  entry->law = PoissonBinomial(probs);
  const int n = base_.num_players();
  entry->e0.resize(n);
  entry->e1.resize(n);
  for (int p = 0; p < n; ++p) {
    entry->e0[p] = ExpectedUtilityBinary(base_, p, 0, entry->law.pmf);
    entry->e1[p] = ExpectedUtilityBinary(base_, p, 1, entry->law.pmf);
  }
  std::unique_lock lock(mu_);
  auto [it, inserted] = memo_.try_emplace(key, std::move(entry));
  return *it->second;
}

QuantizedGame::Expectations QuantizedGame::PureExpectations(
    int player, const Partition& others) const {
  if (others.num_parts() != num_levels() ||
      others.total() != base_.num_players() - 1) {
    throw std::invalid_argument("others must split n - 1 players over k + 1");
  }
  const Entry& e = Lookup(others);
  return {e.e0[player], e.e1[player]};
}

double QuantizedGame::Payoff(int player, int level,
                             const Partition& others) const {
  const Expectations e = PureExpectations(player, others);
  return (static_cast<double>(k_ - level) * e.strategy0 +
          static_cast<double>(level) * e.strategy1) /
         k_;
}

double QuantizedGame::LevelRegret(int player, int level,
                                  const Partition& others) const {
  const Expectations e = PureExpectations(player, others);
  const double played = (static_cast<double>(k_ - level) * e.strategy0 +
                         static_cast<double>(level) * e.strategy1) /
                        k_;
  return std::max(0.0, e.best() - played);
}

const DiscreteDistribution& QuantizedGame::OthersLaw(
    const Partition& others) const {
  return Lookup(others).law;
}

std::size_t QuantizedGame::memo_size() const {
  std::shared_lock lock(mu_);
  return memo_.size();
}

AssignmentProblem BuildQuantizedProblem(const QuantizedGame& game,
                                        const Partition& counts) {
  const int n = game.base().num_players();
  if (counts.total() != n || counts.num_parts() != game.num_levels()) {
    throw std::invalid_argument("counts must split n players over k + 1");
  }
  AssignmentProblem problem(n, counts.counts());
  for (int level = 0; level < game.num_levels(); ++level) {
    if (counts[level] == 0) continue;
    const Partition others = counts.WithRemoved(level);
    for (int p = 0; p < n; ++p) {
      problem.SetCost(p, level, game.LevelRegret(p, level, others));
    }
  }
  return problem;
}

int ChooseGrid(const PtasOptions& options) {
  if (options.k) {
    if (*options.k < 1) throw std::invalid_argument("k must be >= 1");
    return *options.k;
  }
  const double raw = std::ceil(options.c_k / (options.eps * options.eps));
  return static_cast<int>(std::clamp(raw, 1.0,
                                     static_cast<double>(options.k_cap)));
}

namespace {

void FinishReport(const AnonymousGame& game, const std::vector<int>& levels,
                  int k, PtasSolveReport& report) {
  report.levels = levels;
  report.mixed.clear();
  for (int level : levels) {
    report.mixed.push_back(static_cast<double>(level) / k);
  }
  const RegretReport regret = MixedRegretBinary(game, report.mixed);
  report.exact_regret = regret.max_regret;
  report.per_player = regret.per_player;
}

}  // namespace

PtasSolveReport SolvePtas(const AnonymousGame& game,
                          const PtasOptions& options) {
  if (game.num_strategies() != 2) {
    throw std::invalid_argument("the PTAS handles two-strategy games only");
  }
  if (!(options.eps > 0.0 && options.eps < 1.0)) {
    throw std::invalid_argument("eps must lie in (0, 1)");
  }
  const int n = game.num_players();
  const int k = ChooseGrid(options);
  PtasSolveReport report;
  report.k_used = k;
  report.partitions_total = NumPartitions(n, k + 1);
  if (report.partitions_total > options.budget) {
    throw EnumerationBudgetExceeded(
        "C(n + k, k) = " + std::to_string(report.partitions_total) +
        " level partitions exceed the enumeration budget of " +
        std::to_string(options.budget) + "; try a smaller k");
  }

  const QuantizedGame quantized(game, k);
  if (options.minimize) {
    std::mutex mu;
    std::optional<std::pair<double, std::uint64_t>> best;
    std::vector<int> best_levels;
    ForEachPartition(n, k + 1, options.threads,
                     [&](const Partition& x, std::uint64_t rank) {
                       std::optional<double> ceiling;
                       {
                         std::lock_guard<std::mutex> lock(mu);
                         if (best) ceiling = best->first;
                       }
                       auto found = BuildQuantizedProblem(quantized, x)
                                        .SolveBottleneck(ceiling);
                       if (!found) return;
                       std::lock_guard<std::mutex> lock(mu);
                       const std::pair<double, std::uint64_t> key{
                           found->threshold, rank};
                       if (!best || key < *best) {
                         best = key;
                         best_levels = std::move(found->assignment);
                       }
                     });
    report.partitions_examined = report.partitions_total;
    report.threshold_used = best->first;
    double delta = options.eps;
    while (delta < report.threshold_used) {
      delta *= 2.0;
      ++report.escalations;
    }
    report.first_feasible_threshold = delta;
    FinishReport(game, best_levels, k, report);
  } else {
    double delta = options.eps;
    while (true) {
      auto hit = FirstInRankOrder<std::vector<int>>(
          n, k + 1, options.threads, [&](const Partition& x) {
            return BuildQuantizedProblem(quantized, x).Solve(delta);
          });
      if (hit) {
        report.partitions_examined += hit->rank + 1;
        report.threshold_used = delta;
        report.first_feasible_threshold = delta;
        FinishReport(game, hit->value, k, report);
        break;
      }
      report.partitions_examined += report.partitions_total;
      // Regrets never exceed 1, so delta >= 1 always succeeds.
      delta *= 2.0;
      ++report.escalations;
    }
  }
  if (report.exact_regret > report.threshold_used + 1e-9) {
    throw std::logic_error("quantized profile exceeds its threshold");
  }
  return report;
}

RoundedEquilibrium RoundEquilibrium(const AnonymousGame& game,
                                    std::span<const double> mixed,
                                    const RoundingConfig& config) {
  if (game.num_strategies() != 2) {
    throw std::invalid_argument("equilibrium rounding needs s = 2");
  }
  RoundedEquilibrium out;
  out.input_regret = MixedRegretBinary(game, mixed).max_regret;
  out.rounding = RoundProbabilities(mixed, config);
  out.report.k_used = config.k;
  FinishReport(game, out.rounding.levels, config.k, out.report);
  out.report.threshold_used = out.report.exact_regret;
  out.report.first_feasible_threshold = out.report.exact_regret;
  out.gap = out.report.exact_regret - out.input_regret;
  return out;
}

}  // namespace anongame
