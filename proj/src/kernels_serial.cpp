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

#include <algorithm>

#include "geolaw/kernels.hpp"

namespace geolaw::kernels::serial {

FailureRuns scan_bernoulli(std::uint64_t seed, double p, std::uint64_t n_tokens) {
  FailureRuns out;
  std::uint64_t run = 0;
  for (std::uint64_t i = 0; i < n_tokens; ++i) {
    if (placed_at(seed, i, p)) {
      out.gaps.push_back(run);
      run = 0;
    } else {
      ++run;
    }
  }
  out.trailing = run;
  return out;
}

std::vector<std::uint64_t> histogram(std::span<const std::uint64_t> values) {
  if (values.empty()) return {};
  std::vector<std::uint64_t> counts(*std::max_element(values.begin(), values.end()) + 1, 0);
  for (std::uint64_t v : values) ++counts[v];
  return counts;
}

}  // namespace geolaw::kernels::serial
