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

#include "geolaw/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

#include "geolaw/error.hpp"
#include "geolaw/unicode.hpp"

namespace geolaw {
namespace {

struct ValueCount {
  std::size_t value;
  std::size_t count;
};

std::vector<ValueCount> count_values(const std::vector<std::size_t>& values) {
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t v : values) ++counts[v];
  std::vector<ValueCount> out;
  out.reserve(counts.size());
  for (const auto& [v, c] : counts) out.push_back({v, c});
  return out;  // ascending by value
}

// FreqValue, FreqRank and ValueRank views over an integer multiset. offset is
// added to every value before it becomes an x (FreqValue) or y (ValueRank).
ViewTriple value_views(const std::vector<std::size_t>& values, View freq_rank, View freq_value,
                       View value_rank, int offset) {
  const auto counts = count_values(values);
  const double total = static_cast<double>(values.size());

  ViewTriple out;
  out.freq_rank.view = freq_rank;
  out.freq_value.view = freq_value;
  out.value_rank.view = value_rank;
  for (auto* s : {&out.freq_rank, &out.freq_value, &out.value_rank}) {
    s->n_observations = values.size();
    s->x_offset_applied = offset;
  }
  out.freq_rank.x_offset_applied = 0;

  for (const auto& vc : counts) {
    out.freq_value.points.push_back({static_cast<double>(vc.value + offset),
                                     static_cast<double>(vc.count) / total,
                                     static_cast<double>(vc.count)});
  }

  auto ranked = counts;
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const ValueCount& a, const ValueCount& b) { return a.count > b.count; });
  double value_sum = 0.0;
  for (const auto& vc : ranked) value_sum += static_cast<double>(vc.value + offset);
  for (std::size_t r = 0; r < ranked.size(); ++r) {
    const double rank = static_cast<double>(r + 1);
    const double value = static_cast<double>(ranked[r].value + offset);
    out.freq_rank.points.push_back({rank, static_cast<double>(ranked[r].count) / total,
                                    static_cast<double>(ranked[r].count)});
    out.value_rank.points.push_back({rank, value / value_sum, value});
  }
  return out;
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

}  // namespace

std::string_view view_name(View view) {
  switch (view) {
    case View::QuantityFreqRank: return "QuantityFreqRank";
    case View::LengthFreqRank: return "LengthFreqRank";
    case View::FreqLength: return "FreqLength";
    case View::LengthRank: return "LengthRank";
    case View::DistanceFreqRank: return "DistanceFreqRank";
    case View::FreqDistance: return "FreqDistance";
    case View::DistanceRank: return "DistanceRank";
  }
  return "";
}

std::optional<View> view_from_name(std::string_view name) {
  for (View v : kAllViews) {
    if (view_name(v) == name) return v;
  }
  return std::nullopt;
}

std::string_view dimension_name(Dimension dim) {
  switch (dim) {
    case Dimension::quantity: return "quantity";
    case Dimension::length: return "length";
    case Dimension::distance: return "distance";
  }
  return "";
}

std::optional<Dimension> dimension_from_name(std::string_view name) {
  for (Dimension d : {Dimension::quantity, Dimension::length, Dimension::distance}) {
    if (dimension_name(d) == name) return d;
  }
  return std::nullopt;
}

Dimension dimension_of(View view) {
  switch (view) {
    case View::QuantityFreqRank: return Dimension::quantity;
    case View::LengthFreqRank:
    case View::FreqLength:
    case View::LengthRank: return Dimension::length;
    default: return Dimension::distance;
  }
}

std::vector<double> DistributionSeries::xs() const {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.x);
  return out;
}

std::vector<double> DistributionSeries::ys() const {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.y);
  return out;
}

std::vector<double> DistributionSeries::raws() const {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.raw);
  return out;
}

std::vector<EntityCount> entity_counts(const Corpus& corpus, const StatsOptions& options) {
  std::vector<EntityCount> out;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& doc : corpus.documents) {
    for (const auto& span : doc.spans) {
      std::string key = options.fold_case
                            ? unicode::encode(unicode::fold(unicode::decode(span.surface)))
                            : span.surface;
      auto [it, inserted] = index.try_emplace(key, out.size());
      if (inserted) {
        out.push_back({std::move(key), 1});
      } else {
        ++out[it->second].count;
      }
    }
  }
  return out;
}

std::vector<std::size_t> span_lengths(const Corpus& corpus) {
  std::vector<std::size_t> out;
  for (const auto& doc : corpus.documents) {
    for (const auto& span : doc.spans) out.push_back(span.char_length);
  }
  return out;
}

std::vector<std::size_t> entity_distances(const Corpus& corpus) {
  std::vector<std::size_t> out;
  for (const auto& doc : corpus.documents) {
    for (std::size_t i = 1; i < doc.spans.size(); ++i) {
      const EntitySpan& prev = doc.spans[i - 1];
      const EntitySpan& next = doc.spans[i];
      if (corpus.unit_mode == UnitMode::character) {
        out.push_back(next.char_start - prev.char_end);
        continue;
      }
      std::size_t between = 0;
      for (std::size_t t = prev.end_token; t <= next.start_token && t < doc.tokens.size(); ++t) {
        const Token& tok = doc.tokens[t];
        if (tok.doc_char_offset >= prev.char_end &&
            tok.doc_char_offset + tok.char_length <= next.char_start) {
          ++between;
        }
      }
      out.push_back(between);
    }
  }
  return out;
}

DistributionSeries quantity_series(const Corpus& corpus, const StatsOptions& options) {
  auto counts = entity_counts(corpus, options);
  if (counts.empty()) throw EmptySeriesError("corpus has no entity spans");
  std::stable_sort(counts.begin(), counts.end(),
                   [](const EntityCount& a, const EntityCount& b) { return a.count > b.count; });
  std::size_t total = 0;
  for (const auto& c : counts) total += c.count;

  DistributionSeries series;
  series.view = View::QuantityFreqRank;
  series.n_observations = total;
  for (std::size_t r = 0; r < counts.size(); ++r) {
    series.points.push_back({static_cast<double>(r + 1),
                             static_cast<double>(counts[r].count) / static_cast<double>(total),
                             static_cast<double>(counts[r].count)});
  }
  return series;
}

ViewTriple length_series(const Corpus& corpus) {
  const auto lengths = span_lengths(corpus);
  if (lengths.empty()) throw EmptySeriesError("corpus has no entity spans");
  return value_views(lengths, View::LengthFreqRank, View::FreqLength, View::LengthRank, 0);
}

ViewTriple distance_series(const Corpus& corpus) {
  const auto distances = entity_distances(corpus);
  if (distances.empty()) throw EmptySeriesError("no intra-document entity pair");
  const bool has_zero = std::find(distances.begin(), distances.end(), 0) != distances.end();
  return value_views(distances, View::DistanceFreqRank, View::FreqDistance, View::DistanceRank,
                     has_zero ? 1 : 0);
}

BinnedSummary bin_values(const std::vector<std::size_t>& values, Dimension dimension) {
  if (values.empty()) {
    throw EmptySeriesError(std::string("no values for dimension ") +
                           std::string(dimension_name(dimension)));
  }
  BinnedSummary out;
  out.dimension = dimension;
  const std::size_t first = dimension == Dimension::distance ? 0 : 1;
  for (std::size_t v = first; v <= 10; ++v) out.bins.push_back({std::to_string(v), 0.0, 0});
  out.bins.push_back({"11-20", 0.0, 0});
  out.bins.push_back({"21-30", 0.0, 0});
  out.bins.push_back({"31+", 0.0, 0});

  for (std::size_t v : values) {
    std::size_t idx;
    if (v <= 10) {
      // Quantity and length values start at 1; a zero would be a bad span.
      idx = v < first ? 0 : v - first;
    } else if (v <= 20) {
      idx = 11 - first;
    } else if (v <= 30) {
      idx = 12 - first;
    } else {
      idx = 13 - first;
    }
    ++out.bins[idx].count;
  }
  const double total = static_cast<double>(values.size());
  for (auto& bin : out.bins) bin.percent = round2(100.0 * static_cast<double>(bin.count) / total);
  return out;
}

BinnedSummary binned_summary(const Corpus& corpus, Dimension dimension,
                             const StatsOptions& options) {
  std::vector<std::size_t> values;
  switch (dimension) {
    case Dimension::quantity:
      for (const auto& c : entity_counts(corpus, options)) values.push_back(c.count);
      break;
    case Dimension::length:
      values = span_lengths(corpus);
      break;
    case Dimension::distance:
      values = entity_distances(corpus);
      break;
  }
  return bin_values(values, dimension);
}

}  // namespace geolaw
