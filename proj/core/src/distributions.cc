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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace anongame {
namespace {

void CheckProbability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("probability outside [0, 1]: " +
                                std::to_string(p));
  }
}

}  // namespace

double DiscreteDistribution::Mass() const {
  long double sum = 0.0L;
  for (double v : pmf) sum += v;
  return static_cast<double>(sum);
}

double DiscreteDistribution::Mean() const {
  long double sum = 0.0L;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    sum += static_cast<long double>(pmf[i]) *
           static_cast<long double>(offset + static_cast<std::int64_t>(i));
  }
  return static_cast<double>(sum);
}

double DiscreteDistribution::Variance() const {
  const long double mean = Mean();
  long double sum = 0.0L;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    const long double d =
        static_cast<long double>(offset + static_cast<std::int64_t>(i)) - mean;
    sum += static_cast<long double>(pmf[i]) * d * d;
  }
  return static_cast<double>(sum);
}

DiscreteDistribution DiscreteDistribution::PointMass(std::int64_t at) {
  return {.pmf = {1.0}, .offset = at};
}

void Validate(DiscreteDistribution& dist) {
  for (double& v : dist.pmf) {
    if (v < -1e-15 || std::isnan(v)) {
      throw std::invalid_argument("negative probability mass");
    }
    if (v < 0.0) v = 0.0;
  }
  const double total = dist.Mass() + dist.truncated_mass;
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("pmf mass " + std::to_string(total) +
                                " is not 1");
  }
}

DiscreteDistribution PoissonBinomial(std::span<const double> probs) {
  for (double p : probs) CheckProbability(p);
  // Ascending-index update in place, highest index first so each entry is
  // read before it is overwritten.
  std::vector<long double> dp(probs.size() + 1, 0.0L);
  dp[0] = 1.0L;
  std::size_t filled = 0;
  for (double p : probs) {
    const long double q = 1.0L - p;
    dp[filled + 1] = dp[filled] * p;
    for (std::size_t l = filled; l >= 1; --l) {
      dp[l] = dp[l] * q + dp[l - 1] * p;
    }
    dp[0] *= q;
    ++filled;
  }
  DiscreteDistribution out;
  out.pmf.assign(dp.begin(), dp.end());
  return out;
}

DiscreteDistribution RemoveIndicator(const DiscreteDistribution& dist,
                                     double prob) {
  CheckProbability(prob);
  const std::size_t m = dist.pmf.size();
  if (m < 2) {
    throw std::invalid_argument("no indicator left to remove");
  }
  if (m == 2) return DiscreteDistribution::PointMass(dist.offset);
  std::vector<long double> out(m - 1, 0.0L);
  const long double p = prob;
  const long double q = 1.0L - p;
  if (prob <= 0.5) {
    out[0] = dist.pmf[0] / q;
    for (std::size_t l = 1; l + 1 < m; ++l) {
      out[l] = (dist.pmf[l] - p * out[l - 1]) / q;
    }
  } else {
    out[m - 2] = dist.pmf[m - 1] / p;
    for (std::size_t l = m - 2; l >= 1; --l) {
      out[l - 1] = (dist.pmf[l] - q * out[l]) / p;
    }
  }
  DiscreteDistribution result;
  result.offset = dist.offset;
  result.pmf.reserve(out.size());
  for (long double v : out) {
    result.pmf.push_back(v < 0.0L ? 0.0 : static_cast<double>(v));
  }
  return result;
}

double TotalVariation(const DiscreteDistribution& a,
                      const DiscreteDistribution& b) {
  const std::int64_t lo = std::min(a.offset, b.offset);
  const std::int64_t hi =
      std::max(a.offset + static_cast<std::int64_t>(a.pmf.size()),
               b.offset + static_cast<std::int64_t>(b.pmf.size()));
  long double sum = 0.0L;
  for (std::int64_t m = lo; m < hi; ++m) {
    sum += std::abs(static_cast<long double>(a.At(m)) - b.At(m));
  }
  return static_cast<double>(sum / 2.0L);
}

DiscreteDistribution PoissonPmf(double lambda, double truncation_eps) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("Poisson rate must be positive");
  }
  if (!(truncation_eps > 0.0 && truncation_eps <= 1e-6)) {
    throw std::invalid_argument("truncation_eps must lie in (0, 1e-6]");
  }
  const long double rate = lambda;
  long double term = std::exp(-rate);
  long double cumulative = 0.0L;
  DiscreteDistribution out;
  const double hard_cap = lambda + 60.0 * std::sqrt(lambda) + 200.0;
  for (std::int64_t i = 0;; ++i) {
    out.pmf.push_back(static_cast<double>(term));
    cumulative += term;
    const long double tail = 1.0L - cumulative;
    if ((i >= lambda && tail < truncation_eps) || i > hard_cap) {
      out.truncated_mass = static_cast<double>(std::max(tail, 0.0L));
      break;
    }
    term = term * rate / static_cast<long double>(i + 1);
  }
  return out;
}

std::int64_t TranslatedPoissonParams::Shift() const {
  return static_cast<std::int64_t>(std::floor(mu - sigma2));
}

double TranslatedPoissonParams::Rate() const {
  const double diff = mu - sigma2;
  return sigma2 + (diff - std::floor(diff));
}

TranslatedPoissonParams TranslatedPoissonParams::Matching(
    std::span<const double> probs) {
  long double mu = 0.0L;
  long double var = 0.0L;
  for (double p : probs) {
    CheckProbability(p);
    mu += p;
    var += static_cast<long double>(p) * (1.0L - p);
  }
  return {.mu = static_cast<double>(mu), .sigma2 = static_cast<double>(var)};
}

DiscreteDistribution TranslatedPoissonPmf(
    const TranslatedPoissonParams& params, double truncation_eps) {
  if (!(params.sigma2 > 0.0)) {
    throw std::invalid_argument("translated Poisson variance must be > 0");
  }
  DiscreteDistribution out = PoissonPmf(params.Rate(), truncation_eps);
  out.offset = params.Shift();
  return out;
}

double PoissonApproxBound(std::span<const double> probs) {
  long double sum = 0.0L;
  long double sum_sq = 0.0L;
  for (double p : probs) {
    CheckProbability(p);
    sum += p;
    sum_sq += static_cast<long double>(p) * p;
  }
  if (sum <= 0.0L) {
    throw std::invalid_argument("Poisson bound needs a positive mean");
  }
  return static_cast<double>(sum_sq / sum);
}

TranslatedPoissonBound TranslatedPoissonApproxBound(
    std::span<const double> probs) {
  long double cubic = 0.0L;
  for (double p : probs) {
    CheckProbability(p);
    cubic += static_cast<long double>(p) * p * p * (1.0L - p);
  }
  TranslatedPoissonBound out;
  out.params = TranslatedPoissonParams::Matching(probs);
  if (!(out.params.sigma2 > 0.0)) {
    throw std::invalid_argument("translated Poisson bound needs variance > 0");
  }
  const double root = static_cast<double>(std::sqrt(cubic));
  out.bound = (root + 2.0) / out.params.sigma2;
  out.sqrt_term_ratio = root / out.params.sigma2;
  return out;
}

double PoissonTvBound(double lambda1, double lambda2) {
  if (!(lambda1 > 0.0) || !(lambda2 > 0.0)) {
    throw std::invalid_argument("Poisson rates must be positive");
  }
  const double d = std::abs(lambda1 - lambda2);
  return std::exp(d) - std::exp(-d);
}

namespace {

double OrderedTpBound(const TranslatedPoissonParams& first,
                      const TranslatedPoissonParams& second) {
  const double sigma1 = std::sqrt(first.sigma2);
  return std::abs(first.mu - second.mu) / sigma1 +
         (std::abs(first.sigma2 - second.sigma2) + 1.0) / first.sigma2;
}

}  // namespace

double TranslatedPoissonTvBound(const TranslatedPoissonParams& a,
                                const TranslatedPoissonParams& b) {
  if (!(a.sigma2 > 0.0) || !(b.sigma2 > 0.0)) {
    throw std::invalid_argument("translated Poisson variance must be > 0");
  }
  const std::int64_t shift_a = a.Shift();
  const std::int64_t shift_b = b.Shift();
  if (shift_a < shift_b) return OrderedTpBound(a, b);
  if (shift_b < shift_a) return OrderedTpBound(b, a);
  return std::max(OrderedTpBound(a, b), OrderedTpBound(b, a));
}

double MediumRatioBound(double u, std::size_t count) {
  if (!(u > 0.0 && u < 0.5) || count == 0) {
    throw std::invalid_argument("MediumRatioBound needs u in (0, 1/2)");
  }
  const double numerator = 1.0 + 2.0 * u + 4.0 * u * u - 8.0 * u * u * u;
  const double inner = 1.0 - u - 4.0 * u * u + 4.0 * u * u * u;
  return numerator /
         std::sqrt(16.0 * static_cast<double>(count) * u * inner);
}

}  // namespace anongame
