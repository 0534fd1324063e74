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

#include <omp.h>

#include <algorithm>

#include "geolaw/kernels.hpp"

namespace geolaw::kernels::omp {
namespace {

constexpr std::uint64_t kBlock = 1 << 16;

struct BlockRuns {
  std::uint64_t leading = 0;  // failures before the first success
  std::vector<std::uint64_t> inner;  // gaps before the 2nd, 3rd, ... success
  std::uint64_t trailing = 0;
  bool any_success = false;
};

}  // namespace

FailureRuns scan_bernoulli(std::uint64_t seed, double p, std::uint64_t n_tokens) {
  const std::uint64_t n_blocks = (n_tokens + kBlock - 1) / kBlock;
  std::vector<BlockRuns> blocks(n_blocks);

#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(n_blocks); ++b) {
    BlockRuns& block = blocks[static_cast<std::size_t>(b)];
    const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlock;
    const std::uint64_t end = std::min(begin + kBlock, n_tokens);
    std::uint64_t run = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      if (placed_at(seed, i, p)) {
        if (block.any_success) {
          block.inner.push_back(run);
        } else {
          block.leading = run;
          block.any_success = true;
        }
        run = 0;
      } else {
        ++run;
      }
    }
    block.trailing = run;
  }

  FailureRuns out;
  std::size_t total = 0;
  for (const auto& block : blocks) total += block.inner.size() + (block.any_success ? 1 : 0);
  out.gaps.reserve(total);
  std::uint64_t carry = 0;
  for (const auto& block : blocks) {
    if (!block.any_success) {
      carry += block.trailing;
      continue;
    }
    out.gaps.push_back(carry + block.leading);
    out.gaps.insert(out.gaps.end(), block.inner.begin(), block.inner.end());
    carry = block.trailing;
  }
  out.trailing = carry;
  return out;
}

std::vector<std::uint64_t> histogram(std::span<const std::uint64_t> values) {
  if (values.empty()) return {};
  std::uint64_t max_value = 0;
  const auto n = static_cast<std::int64_t>(values.size());
#pragma omp parallel for reduction(max : max_value) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    max_value = std::max(max_value, values[static_cast<std::size_t>(i)]);
  }

  std::vector<std::uint64_t> counts(max_value + 1, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(max_value + 1, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) ++local[values[static_cast<std::size_t>(i)]];
#pragma omp critical
    for (std::size_t v = 0; v < local.size(); ++v) counts[v] += local[v];
  }
  return counts;
}

}  // namespace geolaw::kernels::omp
