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

// Data-parallel inner loops of the generative model. Every kernel has a
// serial reference and an OpenMP version; both return identical results for
// any thread count.

#include <cstdint>
#include <span>
#include <vector>

namespace geolaw::kernels {

// Output number `index` (0-based) of SplitMix64 started from state `seed`.
// Random access is what makes the token stream splittable across threads.
constexpr std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform on [0, 1) with 53 random bits.
constexpr double uniform_at(std::uint64_t seed, std::uint64_t index) {
  return static_cast<double>(splitmix64_at(seed, index) >> 11) * 0x1.0p-53;
}

// Token `index` receives an entity with probability p.
constexpr bool placed_at(std::uint64_t seed, std::uint64_t index, double p) {
  return uniform_at(seed, index) < p;
}

struct FailureRuns {
  // Failures preceding each success; the first counts from stream start.
  std::vector<std::uint64_t> gaps;
  // Failures after the last success (an incomplete waiting time).
  std::uint64_t trailing = 0;
};

namespace serial {
FailureRuns scan_bernoulli(std::uint64_t seed, double p, std::uint64_t n_tokens);
// counts[v] = number of entries equal to v; size max + 1 (empty for no input).
std::vector<std::uint64_t> histogram(std::span<const std::uint64_t> values);
}  // namespace serial

namespace omp {
FailureRuns scan_bernoulli(std::uint64_t seed, double p, std::uint64_t n_tokens);
std::vector<std::uint64_t> histogram(std::span<const std::uint64_t> values);
}  // namespace omp

}  // namespace geolaw::kernels
