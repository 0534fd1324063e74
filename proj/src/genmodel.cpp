// Copyright 2026 The geolaw Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "geolaw/genmodel.hpp"

#include <cmath>
#include <limits>

#include "geolaw/error.hpp"
#include "geolaw/fitting.hpp"
#include "geolaw/kernels.hpp"

namespace geolaw {

void PlacementConfig::validate() const {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("placement probability must be in (0, 1]");
  if (n_tokens < 1) throw DomainError("n_tokens must be at least 1");
  if (k < 1) throw DomainError("k must be at least 1");
}

GapSample simulate_gaps(const PlacementConfig& config, Execution exec) {
  config.validate();
  auto runs = exec == Execution::serial
                  ? kernels::serial::scan_bernoulli(config.seed, config.p, config.n_tokens)
                  : kernels::omp::scan_bernoulli(config.seed, config.p, config.n_tokens);
  GapSample sample;
  sample.k = config.k;
  sample.n_successes = runs.gaps.size();
  if (config.k == 1) {
    sample.gaps = std::move(runs.gaps);
    return sample;
  }
  const std::size_t groups = runs.gaps.size() / config.k;
  sample.gaps.resize(groups, 0);
  for (std::size_t g = 0; g < groups; ++g) {
    for (std::size_t j = 0; j < config.k; ++j) sample.gaps[g] += runs.gaps[g * config.k + j];
  }
  return sample;
}

Moments gap_moments(std::span<const std::uint64_t> gaps) {
  Moments m;
  if (gaps.empty()) return m;
  long double sum = 0.0L;
  for (auto g : gaps) sum += static_cast<long double>(g);
  const long double mean = sum / static_cast<long double>(gaps.size());
  long double ss = 0.0L;
  for (auto g : gaps) {
    const long double d = static_cast<long double>(g) - mean;
    ss += d * d;
  }
  m.mean = static_cast<double>(mean);
  m.variance = static_cast<double>(ss / static_cast<long double>(gaps.size()));
  return m;
}

std::vector<double> negative_binomial_pmf(double p, std::uint64_t k, std::uint64_t max_gap) {
  std::vector<double> pmf(max_gap + 1, 0.0);
  if (p == 1.0) {
    pmf[0] = 1.0;
    return pmf;
  }
  const double kd = static_cast<double>(k);
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  double sum = 0.0;
  for (std::uint64_t t = 0; t <= max_gap; ++t) {
    const double td = static_cast<double>(t);
    const double log_binom = std::lgamma(td + kd) - std::lgamma(td + 1.0) - std::lgamma(kd);
    pmf[t] = std::exp(log_binom + kd * log_p + td * log_q);
    sum += pmf[t];
  }
  for (double& v : pmf) v /= sum;
  return pmf;
}

GapCheck gap_distribution_check(const GapSample& sample, double p) {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("placement probability must be in (0, 1]");
  if (sample.gaps.size() < kMinCheckGaps) {
    throw InsufficientDataError("gap check needs at least " + std::to_string(kMinCheckGaps) +
                                " gaps, got " + std::to_string(sample.gaps.size()));
  }
  GapCheck check;
  check.n_gaps = sample.gaps.size();
  check.moments = gap_moments(sample.gaps);
  const double kd = static_cast<double>(sample.k);
  check.theory_mean = kd * (1.0 - p) / p;
  check.theory_variance = kd * (1.0 - p) / (p * p);
  check.beta_theory = p == 1.0 ? std::numeric_limits<double>::infinity() : -std::log1p(-p);
  check.beta_poisson = p;

  const auto counts = kernels::omp::histogram(sample.gaps);
  std::vector<double> empirical(counts.begin(), counts.end());
  const auto reference = negative_binomial_pmf(p, sample.k, counts.size() - 1);
  check.kl_vs_geometric = kl_divergence(empirical, reference);

  // Frequency-distance view of the gaps; zero gaps shift every x by one.
  std::vector<double> xs, ys;
  const double offset = counts[0] > 0 ? 1.0 : 0.0;
  const double total = static_cast<double>(sample.gaps.size());
  for (std::size_t t = 0; t < counts.size(); ++t) {
    if (counts[t] == 0) continue;
    xs.push_back(static_cast<double>(t) + offset);
    ys.push_back(static_cast<double>(counts[t]) / total);
  }
  if (xs.size() >= 4) {
    const FitReport fit = fit_gamma_type(xs, ys);
    check.fitted_rate = std::get<GammaTypeParams>(fit.params).rate();
  }
  return check;
}

}  // namespace geolaw
