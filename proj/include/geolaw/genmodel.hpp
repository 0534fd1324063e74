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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace geolaw {

// Entity placement as independent Bernoulli(p) decisions, one per token.
struct PlacementConfig {
  double p = 0.5;
  std::uint64_t n_tokens = 1;
  std::uint64_t k = 1;  // successes per waiting time
  std::uint64_t seed = 42;

  // Throws DomainError unless 0 < p <= 1, n_tokens >= 1 and k >= 1.
  void validate() const;
};

struct GapSample {
  // Failures accumulated over each run of k consecutive successes, in stream
  // order. Only complete runs are kept.
  std::vector<std::uint64_t> gaps;
  std::uint64_t n_successes = 0;  // all successes in the stream
  std::uint64_t k = 1;
};

enum class Execution { serial, parallel };

// Token i succeeds iff uniform_at(seed, i) < p, with uniform_at the i-th
// SplitMix64 output (see kernels.hpp). The stream is therefore identical for
// serial and parallel execution and across releases.
GapSample simulate_gaps(const PlacementConfig& config, Execution exec = Execution::parallel);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // population variance
};

Moments gap_moments(std::span<const std::uint64_t> gaps);

// P(T = t) for t = 0..max_gap of the failures before the k-th success,
// renormalized over that range. k = 1 is the geometric law.
std::vector<double> negative_binomial_pmf(double p, std::uint64_t k, std::uint64_t max_gap);

struct GapCheck {
  std::size_t n_gaps = 0;
  Moments moments;
  double theory_mean = 0.0;      // k (1-p) / p
  double theory_variance = 0.0;  // k (1-p) / p^2
  // Empirical pmf against the (truncated) negative binomial reference.
  double kl_vs_geometric = 0.0;
  // -b of a gamma-type fit to the empirical frequency-distance series;
  // empty when the series has fewer than 4 distinct gaps.
  std::optional<double> fitted_rate;
  double beta_theory = 0.0;   // -ln(1-p), exact per-token rate
  double beta_poisson = 0.0;  // p, the small-p reading
};

inline constexpr std::size_t kMinCheckGaps = 10000;

// Throws InsufficientDataError below kMinCheckGaps gaps.
GapCheck gap_distribution_check(const GapSample& sample, double p);

}  // namespace geolaw
