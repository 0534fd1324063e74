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

#include <benchmark/benchmark.h>

#include <omp.h>

#include "geolaw/kernels.hpp"

namespace {

using namespace geolaw::kernels;

void BM_ScanSerial(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::scan_bernoulli(42, 0.01, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ScanOmp(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(omp::scan_bernoulli(42, 0.01, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<std::uint64_t> sample_gaps(std::uint64_t n_tokens) {
  return serial::scan_bernoulli(7, 0.01, n_tokens).gaps;
}

void BM_HistogramSerial(benchmark::State& state) {
  const auto gaps = sample_gaps(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::histogram(gaps));
  state.SetItemsProcessed(state.iterations() * gaps.size());
}

void BM_HistogramOmp(benchmark::State& state) {
  const auto gaps = sample_gaps(static_cast<std::uint64_t>(state.range(0)));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(omp::histogram(gaps));
  state.SetItemsProcessed(state.iterations() * gaps.size());
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_ScanOmp)
    ->ArgsProduct({{1 << 20, 1 << 24}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_HistogramSerial)->Arg(1 << 24)->Arg(1 << 27)->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_HistogramOmp)
    ->ArgsProduct({{1 << 24, 1 << 27}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
