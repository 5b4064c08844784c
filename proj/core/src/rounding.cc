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

#include "anongame/rounding.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace anongame {
namespace {

// Absorbs float noise when S_j * k is conceptually an integer.
constexpr double kFloorSlack = 1e-9;
// Accepted overshoot of a region's closed end for complemented inputs.
constexpr double kBoundarySlack = 1e-12;

// Index j of the grid interval [j/k, (j+1)/k) holding v, using the same
// division-based comparisons as Classify.
int GridInterval(double v, int k) {
  const double kd = k;
  int j = static_cast<int>(std::floor(v * kd));
  while (j > 0 && j / kd > v) --j;
  while ((j + 1) / kd <= v) ++j;
  return j;
}

int FlooredPromotions(double sum, int k, int n_members) {
  const int m = static_cast<int>(std::floor(sum * k + kFloorSlack));
  return std::clamp(m, 0, n_members);
}

struct Bucket {
  std::vector<int> positions;  // positions in the region's input span
  std::vector<double> offsets;
};

// Promotes the m members with the largest offsets (ties by ascending
// original index) from level j to level j + 1.
void Promote(const Bucket& bucket, std::span<const IndexedProbability> members,
             int j, int m, std::vector<int>& levels) {
  std::vector<std::size_t> order(bucket.positions.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (bucket.offsets[a] != bucket.offsets[b]) {
      return bucket.offsets[a] > bucket.offsets[b];
    }
    return members[bucket.positions[a]].index <
           members[bucket.positions[b]].index;
  });
  for (std::size_t r = 0; r < order.size(); ++r) {
    levels[bucket.positions[order[r]]] =
        j + (r < static_cast<std::size_t>(m) ? 1 : 0);
  }
}

void FillRecord(const Bucket& bucket,
                std::span<const IndexedProbability> members,
                const std::vector<int>& levels, int k, IntervalRecord& rec) {
  for (std::size_t t = 0; t < bucket.positions.size(); ++t) {
    const IndexedProbability& m = members[bucket.positions[t]];
    const double q = static_cast<double>(levels[bucket.positions[t]]) / k;
    rec.members.push_back(m.index);
    rec.offsets.push_back(bucket.offsets[t]);
    rec.variance_in += m.value * (1.0 - m.value);
    rec.variance_out += q * (1.0 - q);
  }
}

}  // namespace

std::string_view RegionName(Region region) {
  switch (region) {
    case Region::kLow:
      return "L";
    case Region::kMediumLow:
      return "M1";
    case Region::kMediumHigh:
      return "M2";
    case Region::kHigh:
      return "H";
  }
  return "?";
}

void RoundingConfig::Validate() const {
  if (k < 2) throw std::invalid_argument("rounding needs k >= 2");
  if (!(alpha > 0.0 && alpha < 1.0) || !(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument("alpha and beta must lie in (0, 1)");
  }
  if (!(alpha + beta > 1.0)) {
    throw std::invalid_argument("rounding needs alpha + beta > 1");
  }
}

int RoundingConfig::SmallCutoff() const {
  return static_cast<int>(std::floor(std::pow(static_cast<double>(k), alpha) +
                                     kFloorSlack));
}

double RoundingConfig::LowUpper() const {
  return std::min(static_cast<double>(SmallCutoff()) / k, 0.5);
}

double RoundingConfig::HighLower() const {
  return std::max(static_cast<double>(k - SmallCutoff()) / k, 0.5);
}

Region Classify(double p, const RoundingConfig& config) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("probability outside [0, 1]: " +
                                std::to_string(p));
  }
  if (p < config.LowUpper()) return Region::kLow;
  if (p < 0.5) return Region::kMediumLow;
  if (p < config.HighLower()) return Region::kMediumHigh;
  return Region::kHigh;
}

RegionRounding RoundSmall(std::span<const IndexedProbability> members,
                          const RoundingConfig& config) {
  config.Validate();
  const int k = config.k;
  const int cutoff = config.SmallCutoff();
  const double upper = config.LowUpper();

  RegionRounding out;
  out.levels.assign(members.size(), 0);
  out.workspace.region = Region::kLow;

  std::map<int, Bucket> buckets;
  for (std::size_t t = 0; t < members.size(); ++t) {
    const double v = members[t].value;
    if (!(v >= 0.0 && v <= upper + kBoundarySlack)) {
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " is not in the small-expectation region");
    }
    const int j = GridInterval(v, k);
    if (j >= cutoff) {
      // Only reachable at v == c/k (a complemented kHigh boundary member).
      out.levels[t] = j;
      out.workspace.on_boundary.push_back(members[t].index);
      continue;
    }
    Bucket& b = buckets[j];
    b.positions.push_back(t);
    b.offsets.push_back(std::max(0.0, v - static_cast<double>(j) / k));
  }

  double carry = 0.0;
  for (int j = 0; j < cutoff; ++j) {
    const auto it = buckets.find(j);
    if (it == buckets.end()) {
      // Empty interval: m_j = floor(carry * k) = 0 since carry < 1/k.
      continue;
    }
    const Bucket& b = it->second;
    IntervalRecord rec;
    rec.j = j;
    rec.carry_in = carry;
    rec.sum = carry + std::accumulate(b.offsets.begin(), b.offsets.end(), 0.0);
    rec.promoted =
        FlooredPromotions(rec.sum, k, static_cast<int>(b.positions.size()));
    rec.carry_out = std::max(0.0, rec.sum - static_cast<double>(rec.promoted) / k);
    carry = rec.carry_out;
    Promote(b, members, j, rec.promoted, out.levels);
    FillRecord(b, members, out.levels, k, rec);
    out.workspace.intervals.push_back(std::move(rec));
  }
  out.workspace.final_carry = carry;
  return out;
}

RegionRounding RoundMedium(std::span<const IndexedProbability> members,
                           const RoundingConfig& config) {
  config.Validate();
  const int k = config.k;
  const int cutoff = config.SmallCutoff();
  const int top = k / 2;
  const double lower = config.LowUpper();

  RegionRounding out;
  out.levels.assign(members.size(), 0);
  out.workspace.region = Region::kMediumLow;

  std::map<int, Bucket> buckets;
  for (std::size_t t = 0; t < members.size(); ++t) {
    const double v = members[t].value;
    if (!(v >= lower - kBoundarySlack && v <= 0.5 + kBoundarySlack)) {
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " is not in the medium-expectation region");
    }
    const int j = std::clamp(GridInterval(v, k), cutoff, top);
    Bucket& b = buckets[j];
    b.positions.push_back(t);
    b.offsets.push_back(std::max(0.0, v - static_cast<double>(j) / k));
  }

  for (const auto& [j, b] : buckets) {
    IntervalRecord rec;
    rec.j = j;
    rec.sum = std::accumulate(b.offsets.begin(), b.offsets.end(), 0.0);
    rec.promoted =
        FlooredPromotions(rec.sum, k, static_cast<int>(b.positions.size()));
    rec.discrepancy = rec.sum - static_cast<double>(rec.promoted) / k;
    Promote(b, members, j, rec.promoted, out.levels);
    FillRecord(b, members, out.levels, k, rec);
    out.workspace.intervals.push_back(std::move(rec));
  }
  return out;
}

RoundingResult RoundProbabilities(std::span<const double> p,
                                  const RoundingConfig& config) {
  config.Validate();
  const int k = config.k;
  RoundingResult result;
  result.p.assign(p.begin(), p.end());
  result.config = config;
  result.region_of.resize(p.size());
  result.levels.assign(p.size(), 0);

  std::vector<IndexedProbability> low, medium_low, medium_high, high;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Region region = Classify(p[i], config);
    result.region_of[i] = region;
    const int index = static_cast<int>(i);
    if (p[i] == 0.0 || p[i] == 1.0) {
      result.levels[i] = p[i] == 0.0 ? 0 : k;
      result.fixed_points.push_back(index);
      continue;
    }
    switch (region) {
      case Region::kLow:
        low.push_back({index, p[i]});
        break;
      case Region::kMediumLow:
        medium_low.push_back({index, p[i]});
        break;
      case Region::kMediumHigh:
        medium_high.push_back({index, 1.0 - p[i]});
        break;
      case Region::kHigh:
        high.push_back({index, 1.0 - p[i]});
        break;
    }
  }

  auto apply = [&](const std::vector<IndexedProbability>& members,
                   RegionRounding rounded, Region region, bool complemented,
                   IntervalWorkspace& slot) {
    for (std::size_t t = 0; t < members.size(); ++t) {
      const int level = rounded.levels[t];
      result.levels[members[t].index] = complemented ? k - level : level;
    }
    rounded.workspace.region = region;
    rounded.workspace.complemented = complemented;
    slot = std::move(rounded.workspace);
  };
  apply(low, RoundSmall(low, config), Region::kLow, false, result.low);
  apply(medium_low, RoundMedium(medium_low, config), Region::kMediumLow, false,
        result.medium_low);
  apply(medium_high, RoundMedium(medium_high, config), Region::kMediumHigh,
        true, result.medium_high);
  apply(high, RoundSmall(high, config), Region::kHigh, true, result.high);

  result.q.reserve(p.size());
  for (int level : result.levels) {
    result.q.push_back(static_cast<double>(level) / k);
  }
  return result;
}

std::vector<double> NaiveRound(std::span<const double> p, int k) {
  if (k < 1) throw std::invalid_argument("naive rounding needs k >= 1");
  std::vector<double> q;
  q.reserve(p.size());
  for (double v : p) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("probability outside [0, 1]");
    }
    q.push_back(std::floor(v * k + 0.5) / k);
  }
  return q;
}

}  // namespace anongame
