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

#ifndef ANONGAME_DISTRIBUTIONS_H_
#define ANONGAME_DISTRIBUTIONS_H_

#include <cstdint>
#include <span>
#include <vector>

namespace anongame {

inline constexpr double kDefaultTruncationEps = 1e-12;

// A finitely supported pmf on the integers offset, offset + 1, ...,
// offset + pmf.size() - 1. Truncated infinite-support laws record the
// discarded tail in `truncated_mass` so that distance comparisons can add it
// back as explicit slack.
struct DiscreteDistribution {
  std::vector<double> pmf;
  std::int64_t offset = 0;
  double truncated_mass = 0.0;

  // Probability of the integer m (0 outside the stored support).
  double At(std::int64_t m) const {
    const std::int64_t i = m - offset;
    return (i < 0 || i >= static_cast<std::int64_t>(pmf.size()))
               ? 0.0
               : pmf[static_cast<std::size_t>(i)];
  }
  double Mass() const;
  double Mean() const;
  double Variance() const;

  static DiscreteDistribution PointMass(std::int64_t at);
};

// Clamps entries in [-1e-15, 0) to 0 and checks the mass lies within
// 1e-9 of 1 (after adding truncated_mass). Throws std::invalid_argument.
void Validate(DiscreteDistribution& dist);

// Law of the sum of independent indicators with the given means, by the
// O(n^2) convolution DP in extended precision. Empty input gives the point
// mass at 0. Throws std::invalid_argument for entries outside [0, 1].
DiscreteDistribution PoissonBinomial(std::span<const double> probs);

// Removes one indicator with mean `prob` from a Poisson binomial law by
// deconvolution. Runs forward for prob <= 1/2 and backward otherwise, so the
// recursion never amplifies rounding error.
DiscreteDistribution RemoveIndicator(const DiscreteDistribution& dist,
                                     double prob);

// Half the L1 distance between the pmfs, aligned by offset.
double TotalVariation(const DiscreteDistribution& a,
                      const DiscreteDistribution& b);

// Poisson(lambda), truncated at the first index where the remaining tail is
// below truncation_eps. Throws std::invalid_argument for lambda <= 0 or
// truncation_eps outside (0, 1e-6].
DiscreteDistribution PoissonPmf(double lambda,
                                double truncation_eps = kDefaultTruncationEps);

// TP(mu, sigma2): Y - floor(mu - sigma2) ~ Poisson(sigma2 + {mu - sigma2}).
struct TranslatedPoissonParams {
  double mu = 0.0;
  double sigma2 = 1.0;

  std::int64_t Shift() const;
  double Rate() const;

  // Mean and variance of a sum of independent indicators.
  static TranslatedPoissonParams Matching(std::span<const double> probs);
};

DiscreteDistribution TranslatedPoissonPmf(
    const TranslatedPoissonParams& params,
    double truncation_eps = kDefaultTruncationEps);

// sum p_i^2 / sum p_i: bounds the distance between a Poisson binomial and
// the Poisson law with the same mean. Throws if every p_i is 0.
double PoissonApproxBound(std::span<const double> probs);

struct TranslatedPoissonBound {
  double bound = 0.0;
  TranslatedPoissonParams params;
  // sqrt(sum p^3 (1 - p)) / sum p (1 - p), the part of the bound that
  // MediumRatioBound controls.
  double sqrt_term_ratio = 0.0;
};

// (sqrt(sum p^3 (1 - p)) + 2) / sum p (1 - p): bounds the distance between a
// Poisson binomial and the translated Poisson law matching its first two
// moments. Throws if the variance is 0.
TranslatedPoissonBound TranslatedPoissonApproxBound(
    std::span<const double> probs);

// e^d - e^-d with d = |lambda1 - lambda2|.
double PoissonTvBound(double lambda1, double lambda2);

// |mu1 - mu2| / sigma1 + (|sigma1^2 - sigma2^2| + 1) / sigma1^2, evaluated
// with the pair ordered so that floor(mu1 - sigma1^2) <= floor(mu2 -
// sigma2^2). When the two shifts coincide both orderings are admissible and
// the larger value is returned.
double TranslatedPoissonTvBound(const TranslatedPoissonParams& a,
                                const TranslatedPoissonParams& b);

// Upper bound on sqrt(sum p^3 (1 - p)) / sum p (1 - p) over any `count`
// probabilities in [u, 1/2], u in (0, 1/2):
//   (1 + 2u + 4u^2 - 8u^3) / sqrt(16 count u (1 - u - 4u^2 + 4u^3)).
double MediumRatioBound(double u, std::size_t count);

}  // namespace anongame

#endif  // ANONGAME_DISTRIBUTIONS_H_
