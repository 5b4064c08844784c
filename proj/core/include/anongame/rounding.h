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

#ifndef ANONGAME_ROUNDING_H_
#define ANONGAME_ROUNDING_H_

#include <span>
#include <string_view>
#include <vector>

namespace anongame {

// Rounds Bernoulli means to the 1/k grid while keeping the law of their sum
// close in total variation, independently of how many means there are.
//
// [0, 1] is split at c/k, 1/2 and 1 - c/k with c = floor(k^alpha):
//   kLow         [0, c/k)          carry rounding, preserves the region sum
//   kMediumLow   [c/k, 1/2)        per-interval rounding, tracks variance
//   kMediumHigh  [1/2, 1 - c/k)    complement of kMediumLow
//   kHigh        [1 - c/k, 1]      complement of kLow
// When c/k >= 1/2 the medium regions are empty and the split point is 1/2.
enum class Region { kLow, kMediumLow, kMediumHigh, kHigh };

std::string_view RegionName(Region region);

struct RoundingConfig {
  int k = 0;
  double alpha = 0.75;
  // Only used by the analysis; carried for reporting.
  double beta = 0.75;

  // Throws std::invalid_argument unless k >= 2, alpha, beta in (0, 1) and
  // alpha + beta > 1.
  void Validate() const;
  // floor(k^alpha), with 1e-9 slack so exact powers are not lost to pow().
  int SmallCutoff() const;
  // Right end of kLow: min(c/k, 1/2).
  double LowUpper() const;
  // Left end of kHigh: max(1 - c/k, 1/2).
  double HighLower() const;
};

// One member of a region instance: original index and its (possibly
// complemented) mean.
struct IndexedProbability {
  int index = 0;
  double value = 0.0;
};

// Audit record for one interval I_j = [j/k, (j+1)/k) of a region.
struct IntervalRecord {
  int j = 0;
  std::vector<int> members;      // original indices, in input order
  std::vector<double> offsets;   // delta_i = p_i - j/k, each in [0, 1/k)
  double carry_in = 0.0;         // epsilon_j (kLow only)
  double sum = 0.0;              // S_j
  int promoted = 0;              // m_j
  double carry_out = 0.0;        // epsilon_{j+1} (kLow only)
  double discrepancy = 0.0;      // zeta_j = sum delta - m_j / k (medium only)
  double variance_in = 0.0;      // sum p (1 - p) over the members
  double variance_out = 0.0;     // sum q (1 - q) over the members
};

struct IntervalWorkspace {
  Region region = Region::kLow;
  // True when the recorded values are 1 - p (kMediumHigh, kHigh).
  bool complemented = false;
  std::vector<IntervalRecord> intervals;  // nonempty intervals, ascending j
  // Members sitting exactly on the region's upper grid point, which only a
  // complemented instance can produce; they keep their value.
  std::vector<int> on_boundary;
  double final_carry = 0.0;  // epsilon after the last kLow interval
};

// Output of a region procedure: grid level (q = level / k) per input member,
// in input order, and the audit trail.
struct RegionRounding {
  std::vector<int> levels;
  IntervalWorkspace workspace;
};

struct RoundingResult {
  std::vector<double> p;
  std::vector<double> q;
  std::vector<int> levels;  // q[i] == levels[i] / k exactly
  RoundingConfig config;
  std::vector<Region> region_of;
  // Indices with p in {0, 1}; they are copied through unchanged.
  std::vector<int> fixed_points;
  IntervalWorkspace low;
  IntervalWorkspace medium_low;
  IntervalWorkspace medium_high;
  IntervalWorkspace high;
};

Region Classify(double p, const RoundingConfig& config);

// Carry rounding over the intervals 0 .. c - 1. Input values must lie in
// [0, LowUpper()] (the closed end admits complemented kHigh members).
RegionRounding RoundSmall(std::span<const IndexedProbability> members,
                          const RoundingConfig& config);

// Independent per-interval rounding over the intervals c .. floor(k/2).
// Input values must lie in [LowUpper(), 1/2].
RegionRounding RoundMedium(std::span<const IndexedProbability> members,
                           const RoundingConfig& config);

RoundingResult RoundProbabilities(std::span<const double> p,
                                  const RoundingConfig& config);

// Nearest multiple of 1/k, ties rounding up. The baseline that fails.
std::vector<double> NaiveRound(std::span<const double> p, int k);

}  // namespace anongame

#endif  // ANONGAME_ROUNDING_H_
