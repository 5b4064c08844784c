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

#include "anongame/partition.h"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace anongame {

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact at every step; split to avoid
    // intermediate overflow where possible.
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    const std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(i));
    const std::uint64_t r = result / g;
    const std::uint64_t d = static_cast<std::uint64_t>(i) / g;
    const std::uint64_t num_reduced = num / d;  // d divides num here
    if (num_reduced != 0 && r > kMax / num_reduced) return kMax;
    result = r * num_reduced;
  }
  return result;
}

std::uint64_t NumPartitions(int total, int parts) {
  if (parts <= 0 || total < 0) return 0;
  return Binomial(total + parts - 1, parts - 1);
}

Partition::Partition(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) {
    throw std::invalid_argument("partition needs at least one bin");
  }
  long long sum = 0;
  for (int c : counts_) {
    if (c < 0) throw std::invalid_argument("partition count is negative");
    sum += c;
  }
  if (sum > std::numeric_limits<int>::max()) {
    throw std::invalid_argument("partition total overflows");
  }
  total_ = static_cast<int>(sum);
}

Partition Partition::First(int total, int parts) {
  std::vector<int> counts(parts, 0);
  counts[0] = total;
  return Partition(std::move(counts));
}

Partition Partition::Unrank(std::uint64_t rank, int total, int parts) {
  if (parts < 1 || total < 0) {
    throw std::invalid_argument("bad partition shape");
  }
  if (rank >= NumPartitions(total, parts)) {
    throw std::out_of_range("partition rank " + std::to_string(rank) +
                            " out of range");
  }
  std::vector<int> counts(parts, 0);
  int budget = total;
  for (int t = 1; t < parts; ++t) {
    const int remaining = parts - 1 - t;
    int v = 0;
    while (true) {
      const std::uint64_t block = NumPartitions(budget - v, remaining + 1);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    counts[t] = v;
    budget -= v;
  }
  counts[0] = budget;
  return Partition(std::move(counts));
}

std::uint64_t Partition::Rank() const {
  // Suffixes with prefix fixed and a smaller value v at position t: the
  // remaining bins (t+1..s-1) take any counts with sum <= budget - v, i.e.
  // NumPartitions(budget - v, remaining + 1) of them.
  std::uint64_t rank = 0;
  int budget = total_;
  const int parts = num_parts();
  for (int t = 1; t < parts; ++t) {
    const int remaining = parts - 1 - t;
    for (int v = 0; v < counts_[t]; ++v) {
      rank += NumPartitions(budget - v, remaining + 1);
    }
    budget -= counts_[t];
  }
  return rank;
}

bool Partition::Advance() {
  const int parts = num_parts();
  if (parts == 1) return false;
  // counts_[0] is the slack; the suffix is an odometer with sum <= total.
  if (counts_[0] > 0) {
    ++counts_[parts - 1];
    --counts_[0];
    return true;
  }
  // No slack: zero the last nonzero suffix digit and carry into the one
  // before it. The suffix is (0, ..., 0, total) exactly when we are last.
  int t = parts - 1;
  while (t >= 1 && counts_[t] == 0) --t;
  if (t <= 1) return false;
  counts_[0] += counts_[t];
  counts_[t] = 0;
  ++counts_[t - 1];
  --counts_[0];
  return true;
}

Partition Partition::WithAdded(int i) const {
  Partition p = *this;
  ++p.counts_[i];
  ++p.total_;
  return p;
}

Partition Partition::WithRemoved(int i) const {
  if (counts_[i] == 0) throw std::invalid_argument("bin is already empty");
  Partition p = *this;
  --p.counts_[i];
  --p.total_;
  return p;
}

}  // namespace anongame
