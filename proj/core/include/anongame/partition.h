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

#ifndef ANONGAME_PARTITION_H_
#define ANONGAME_PARTITION_H_

#include <cstdint>
#include <span>
#include <vector>

namespace anongame {

// Saturating binomial coefficient: returns UINT64_MAX when C(n, k) does not
// fit in 64 bits. C(n, k) = 0 for k < 0 or k > n.
std::uint64_t Binomial(int n, int k);

// Number of ways to split `total` players over `parts` strategy bins,
// C(total + parts - 1, parts - 1). Saturates like Binomial.
std::uint64_t NumPartitions(int total, int parts);

// An s-vector of nonnegative counts with a fixed sum. Strategies are indexed
// from 0. The canonical order is ascending lexicographic on the suffix
// (counts[1], ..., counts[s-1]); for s = 2 the rank is simply counts[1].
class Partition {
 public:
  explicit Partition(std::vector<int> counts);

  static Partition Unrank(std::uint64_t rank, int total, int parts);
  // The rank-0 partition: everyone in bin 0.
  static Partition First(int total, int parts);

  int num_parts() const { return static_cast<int>(counts_.size()); }
  int total() const { return total_; }
  int operator[](int i) const { return counts_[i]; }
  const std::vector<int>& counts() const { return counts_; }

  std::uint64_t Rank() const;

  // Steps to the next partition in rank order. Returns false (and leaves the
  // partition unchanged) when this is the last one.
  bool Advance();

  // Copy with one unit added to / removed from bin i.
  Partition WithAdded(int i) const;
  Partition WithRemoved(int i) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.counts_ == b.counts_;
  }

 private:
  std::vector<int> counts_;
  int total_ = 0;
};

}  // namespace anongame

#endif  // ANONGAME_PARTITION_H_
