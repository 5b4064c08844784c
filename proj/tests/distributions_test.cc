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

#include "anongame/distributions.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "anongame/harness.h"

namespace anongame {
namespace {

void ExpectPmf(const DiscreteDistribution& d, std::vector<double> expected,
               double tol = 1e-15) {
  ASSERT_EQ(d.pmf.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(d.pmf[i], expected[i], tol) << "index " << i;
  }
}

TEST(PoissonBinomialTest, Examples) {
  ExpectPmf(PoissonBinomial({}), {1.0});
  ExpectPmf(PoissonBinomial(std::vector<double>{0.5, 0.5}), {0.25, 0.5, 0.25});
  ExpectPmf(PoissonBinomial(std::vector<double>{0.3, 0.6}), {0.28, 0.54, 0.18});
}

TEST(PoissonBinomialTest, MatchesEnumeration) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int n = 0; n <= 12; ++n) {
    std::vector<double> p(n);
    for (double& v : p) v = unit(rng);
    const std::vector<double> brute = EnumeratedPoissonBinomial(p);
    ExpectPmf(PoissonBinomial(p), brute, 1e-12);
  }
}

TEST(PoissonBinomialTest, RejectsBadProbabilities) {
  EXPECT_THROW(PoissonBinomial(std::vector<double>{1.5}),
               std::invalid_argument);
  EXPECT_THROW(PoissonBinomial(std::vector<double>{std::nan("")}),
               std::invalid_argument);
}

TEST(RemoveIndicatorTest, MatchesDirectDp) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int n = 1; n <= 300; n += 37) {
    std::vector<double> p(n);
    for (double& v : p) v = unit(rng);
    p[0] = 0.0;
    if (n > 1) p[1] = 1.0;
    const DiscreteDistribution full = PoissonBinomial(p);
    for (int j = 0; j < n; ++j) {
      std::vector<double> rest = p;
      rest.erase(rest.begin() + j);
      const DiscreteDistribution direct = PoissonBinomial(rest);
      const DiscreteDistribution removed = RemoveIndicator(full, p[j]);
      EXPECT_LT(TotalVariation(direct, removed), 1e-12) << "n=" << n;
    }
  }
}

TEST(TotalVariationTest, Examples) {
  const DiscreteDistribution a = PoissonBinomial(std::vector<double>{0.5, 0.5});
  const DiscreteDistribution b = PoissonBinomial(std::vector<double>{0.3, 0.6});
  EXPECT_EQ(TotalVariation(a, a), 0.0);
  EXPECT_NEAR(TotalVariation(a, b), 0.07, 1e-15);
  EXPECT_EQ(TotalVariation(DiscreteDistribution::PointMass(0),
                           DiscreteDistribution::PointMass(1)),
            1.0);
}

TEST(PoissonPmfTest, Examples) {
  EXPECT_NEAR(PoissonPmf(1.0).pmf[0], std::exp(-1.0), 1e-15);
  EXPECT_NEAR(PoissonPmf(2.0).pmf[2], 2.0 * std::exp(-2.0), 1e-15);
  const DiscreteDistribution p5 = PoissonPmf(5.0, 1e-12);
  EXPECT_GE(p5.Mass(), 1.0 - 1e-12);
  EXPECT_LE(p5.Mass(), 1.0 + 1e-15);
  EXPECT_LT(p5.truncated_mass, 1e-12);
  EXPECT_NEAR(p5.Mean(), 5.0, 1e-9);
}

TEST(PoissonPmfTest, RejectsBadArguments) {
  EXPECT_THROW(PoissonPmf(0.0), std::invalid_argument);
  EXPECT_THROW(PoissonPmf(-1.0), std::invalid_argument);
  EXPECT_THROW(PoissonPmf(1.0, 0.1), std::invalid_argument);
}

TEST(TranslatedPoissonTest, Examples) {
  const DiscreteDistribution tp11 = TranslatedPoissonPmf({1.0, 1.0});
  EXPECT_EQ(tp11.offset, 0);
  EXPECT_LT(TotalVariation(tp11, PoissonPmf(1.0)), 1e-15);

  const DiscreteDistribution tp52 = TranslatedPoissonPmf({5.0, 2.0});
  EXPECT_EQ(tp52.offset, 3);
  EXPECT_NEAR(tp52.At(3), std::exp(-2.0), 1e-15);

  const TranslatedPoissonParams half{5.5, 2.0};
  EXPECT_EQ(half.Shift(), 3);
  EXPECT_DOUBLE_EQ(half.Rate(), 2.5);
  EXPECT_NEAR(TranslatedPoissonPmf(half).At(3), std::exp(-2.5), 1e-15);

  EXPECT_THROW(TranslatedPoissonPmf({1.0, 0.0}), std::invalid_argument);
}

TEST(TranslatedPoissonTest, MatchesMoments) {
  const std::vector<double> p = {0.2, 0.5, 0.7};
  const TranslatedPoissonParams m = TranslatedPoissonParams::Matching(p);
  EXPECT_NEAR(m.mu, 1.4, 1e-15);
  EXPECT_NEAR(m.sigma2, 0.16 + 0.25 + 0.21, 1e-15);
  const DiscreteDistribution d = TranslatedPoissonPmf({30.3, 7.9});
  EXPECT_NEAR(d.Mean(), 30.3, 1e-9);
  EXPECT_NEAR(d.Variance(), 7.9 + (30.3 - 7.9 - std::floor(30.3 - 7.9)),
              1e-9);
}

TEST(BoundsTest, PoissonApproxBound) {
  EXPECT_NEAR(PoissonApproxBound(std::vector<double>(7, 0.03)), 0.03, 1e-15);
  EXPECT_NEAR(PoissonApproxBound(std::vector<double>{0.1, 0.2}), 0.05 / 0.3,
              1e-15);
  EXPECT_THROW(PoissonApproxBound(std::vector<double>{0.0, 0.0}),
               std::invalid_argument);
}

TEST(BoundsTest, TranslatedPoissonApproxBound) {
  const TranslatedPoissonBound b =
      TranslatedPoissonApproxBound(std::vector<double>{0.5, 0.5});
  EXPECT_NEAR(b.bound, (std::sqrt(0.125) + 2.0) / 0.5, 1e-14);
  EXPECT_NEAR(b.bound, 4.7071, 1e-4);
  EXPECT_DOUBLE_EQ(b.params.mu, 1.0);
  EXPECT_DOUBLE_EQ(b.params.sigma2, 0.5);
  double previous = b.bound;
  for (int m = 4; m <= 4096; m *= 4) {
    const double next =
        TranslatedPoissonApproxBound(std::vector<double>(m, 0.5)).bound;
    EXPECT_NEAR(next, (std::sqrt(m / 16.0) + 2.0) / (m / 4.0), 1e-12);
    EXPECT_LT(next, previous);
    previous = next;
  }
  EXPECT_THROW(TranslatedPoissonApproxBound(std::vector<double>{0.0, 1.0}),
               std::invalid_argument);
}

TEST(BoundsTest, PoissonTvBound) {
  EXPECT_EQ(PoissonTvBound(3.0, 3.0), 0.0);
  // e^0.1 - e^-0.1 = 2 sinh(0.1).
  EXPECT_NEAR(PoissonTvBound(1.0, 1.1), 0.2003335, 1e-7);
  EXPECT_NEAR(PoissonTvBound(1.1, 1.0), 2.0 * std::sinh(0.1), 1e-15);
  for (int k = 2; k <= 1000; ++k) {
    EXPECT_LE(PoissonTvBound(1.0, 1.0 + 1.0 / k), 3.0 / k);
  }
  EXPECT_THROW(PoissonTvBound(0.0, 1.0), std::invalid_argument);
}

TEST(BoundsTest, TranslatedPoissonTvBound) {
  EXPECT_NEAR(TranslatedPoissonTvBound({4.0, 9.0}, {4.0, 9.0}), 1.0 / 9.0,
              1e-15);
  EXPECT_NEAR(TranslatedPoissonTvBound({10.0, 4.0}, {11.0, 4.0}), 0.75,
              1e-15);
  EXPECT_NEAR(TranslatedPoissonTvBound({11.0, 4.0}, {10.0, 4.0}), 0.75,
              1e-15);
  // Equal shifts: neither ordering is forced and the larger value is kept.
  const TranslatedPoissonParams a{10.0, 4.0};
  const TranslatedPoissonParams b{15.5, 9.0};
  ASSERT_EQ(a.Shift(), b.Shift());
  const double forward = TranslatedPoissonTvBound(a, b);
  EXPECT_EQ(forward, TranslatedPoissonTvBound(b, a));
  EXPECT_NEAR(forward, 5.5 / 2.0 + 6.0 / 4.0, 1e-14);
  EXPECT_THROW(TranslatedPoissonTvBound({1.0, 0.0}, a), std::invalid_argument);
}

TEST(BoundsTest, MediumRatioBoundHoldsOnItsDomain) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const double u = std::uniform_real_distribution<double>(0.01, 0.49)(rng);
    const int m = 1 + static_cast<int>(rng() % 200);
    std::vector<double> p(m);
    for (double& v : p) v = std::uniform_real_distribution<double>(u, 0.5)(rng);
    const double ratio = TranslatedPoissonApproxBound(p).sqrt_term_ratio;
    EXPECT_LE(ratio, MediumRatioBound(u, m) * (1.0 + 1e-12));
  }
}

}  // namespace
}  // namespace anongame
