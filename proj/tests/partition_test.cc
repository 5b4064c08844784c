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

#include <stdexcept>

#include <gtest/gtest.h>

namespace anongame {
namespace {

TEST(BinomialTest, SmallValues) {
  EXPECT_EQ(Binomial(5, 2), 10u);
  EXPECT_EQ(Binomial(0, 0), 1u);
  EXPECT_EQ(Binomial(3, 4), 0u);
  EXPECT_EQ(NumPartitions(2, 3), 6u);
  EXPECT_EQ(NumPartitions(0, 4), 1u);
}

TEST(PartitionTest, TwoStrategyRankIsSecondCount) {
  for (int x = 0; x <= 3; ++x) {
    EXPECT_EQ(Partition({3 - x, x}).Rank(), static_cast<std::uint64_t>(x));
  }
}

TEST(PartitionTest, ThreeStrategyRanks) {
  EXPECT_EQ(Partition({2, 0, 0}).Rank(), 0u);
  EXPECT_EQ(Partition({0, 0, 2}).Rank(), 2u);
  EXPECT_EQ(Partition({0, 2, 0}).Rank(), 5u);
}

TEST(PartitionTest, RankUnrankRoundTripExhaustive) {
  for (int parts = 2; parts <= 5; ++parts) {
    for (int total = 0; total <= 20; ++total) {
      const std::uint64_t count = NumPartitions(total, parts);
      Partition x = Partition::First(total, parts);
      std::uint64_t expected = 0;
      do {
        ASSERT_EQ(x.Rank(), expected);
        ASSERT_EQ(Partition::Unrank(expected, total, parts), x);
        ++expected;
      } while (x.Advance());
      ASSERT_EQ(expected, count) << "parts=" << parts << " total=" << total;
    }
  }
}

TEST(PartitionTest, AddRemove) {
  const Partition x({1, 0, 2});
  EXPECT_EQ(x.WithAdded(1), Partition({1, 1, 2}));
  EXPECT_EQ(x.WithRemoved(2), Partition({1, 0, 1}));
  EXPECT_THROW(x.WithRemoved(1), std::invalid_argument);
}

TEST(PartitionTest, RejectsInvalid) {
  EXPECT_THROW(Partition({}), std::invalid_argument);
  EXPECT_THROW(Partition({1, -1}), std::invalid_argument);
  EXPECT_THROW(Partition::Unrank(6, 2, 3), std::out_of_range);
}

}  // namespace
}  // namespace anongame
