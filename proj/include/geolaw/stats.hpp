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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geolaw/corpus.hpp"

namespace geolaw {

enum class View {
  QuantityFreqRank,
  LengthFreqRank,
  FreqLength,
  LengthRank,
  DistanceFreqRank,
  FreqDistance,
  DistanceRank,
};

inline constexpr View kAllViews[] = {
    View::QuantityFreqRank, View::LengthFreqRank,   View::FreqLength,   View::LengthRank,
    View::DistanceFreqRank, View::FreqDistance,     View::DistanceRank,
};

std::string_view view_name(View view);
std::optional<View> view_from_name(std::string_view name);

enum class Dimension { quantity, length, distance };

std::string_view dimension_name(Dimension dim);
std::optional<Dimension> dimension_from_name(std::string_view name);
Dimension dimension_of(View view);

struct SeriesPoint {
  double x;
  double y;    // normalized
  double raw;  // occurrence count, or the value itself for *Rank views
};

struct DistributionSeries {
  View view = View::QuantityFreqRank;
  std::vector<SeriesPoint> points;
  bool normalized = true;
  // 1 when a zero distance forced every distance value up by one.
  int x_offset_applied = 0;
  // Occurrences underlying the series (spans, or adjacent pairs).
  std::size_t n_observations = 0;

  std::size_t size() const { return points.size(); }
  std::vector<double> xs() const;
  std::vector<double> ys() const;
  std::vector<double> raws() const;
};

// The three views of one dimension share a single frequency-rank axis.
struct ViewTriple {
  DistributionSeries freq_rank;
  DistributionSeries freq_value;
  DistributionSeries value_rank;
};

struct StatsOptions {
  bool fold_case = false;
};

struct EntityCount {
  std::string surface;
  std::size_t count;
};

// Distinct entity surfaces in first-occurrence order.
std::vector<EntityCount> entity_counts(const Corpus& corpus, const StatsOptions& options = {});
std::vector<std::size_t> span_lengths(const Corpus& corpus);
// Gaps between consecutive spans of each document, in the corpus unit.
std::vector<std::size_t> entity_distances(const Corpus& corpus);

DistributionSeries quantity_series(const Corpus& corpus, const StatsOptions& options = {});
ViewTriple length_series(const Corpus& corpus);
ViewTriple distance_series(const Corpus& corpus);

struct Bin {
  std::string label;
  double percent;  // rounded to 2 decimals
  std::size_t count;
};

struct BinnedSummary {
  Dimension dimension = Dimension::quantity;
  std::vector<Bin> bins;
};

// Quantity bins count distinct entities by occurrence count; length and
// distance bins count occurrences.
BinnedSummary binned_summary(const Corpus& corpus, Dimension dimension,
                             const StatsOptions& options = {});
// Layout used for the raw values directly; exposed for tests and the CLI.
BinnedSummary bin_values(const std::vector<std::size_t>& values, Dimension dimension);

}  // namespace geolaw
