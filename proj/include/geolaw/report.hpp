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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geolaw/cutoff.hpp"
#include "geolaw/fitting.hpp"
#include "geolaw/stats.hpp"
#include "json.hpp"

namespace geolaw {

using Json = nlohmann::json;

inline constexpr const char* kToolName = "geolaw";
inline constexpr const char* kToolVersion = "0.1.0";

struct ViewReport {
  DistributionSeries series;
  std::vector<FamilyOutcome> fits;
  std::optional<CutoffEstimate> cutoff;
  std::string cutoff_method;   // "fixed_point" or "fl_max"
  std::string cutoff_warning;  // why no estimate, or why fl_max fell back
};

struct CorpusSummary {
  std::size_t n_documents = 0;
  std::size_t n_entities = 0;
  std::size_t n_distinct_entities = 0;
};

struct AnalysisReport {
  std::string tool_version = kToolVersion;
  Json config = Json::object();
  CorpusSummary corpus;
  std::vector<ViewReport> views;
};

// Non-finite doubles become the strings "inf", "-inf" and "nan" so reports
// survive a JSON round trip.
Json number_to_json(double value);
double number_from_json(const Json& value);

Json to_json(const FitReport& report);
FitReport fit_report_from_json(const Json& j);
Json to_json(const FamilyOutcome& outcome);
FamilyOutcome family_outcome_from_json(const Json& j);
Json to_json(const CutoffEstimate& estimate);
CutoffEstimate cutoff_from_json(const Json& j);
Json to_json(const DistributionSeries& series);
DistributionSeries series_from_json(const Json& j);
Json to_json(const AnalysisReport& report);
AnalysisReport analysis_report_from_json(const Json& j);

// Two-space indented, sorted keys, trailing newline.
std::string dump_json(const Json& j);

// %.17g
std::string format_double(double value);

void write_series_csv(std::ostream& out, const DistributionSeries& series);
// x, y_observed, then y_fitted_<family> for every successful fit.
void write_plot_csv(std::ostream& out, const ViewReport& view);

struct BinRow {
  std::string dataset;
  BinnedSummary summary;
};
// One header row of bin labels, one row of percentages per dataset.
void write_bins_csv(std::ostream& out, const std::vector<BinRow>& rows);

struct XYTable {
  std::vector<double> x;
  std::vector<double> y;
};

// Header must name an "x" column and a "y" (or "y_observed") column.
// Throws ParseError on malformed content.
XYTable read_xy_csv(std::istream& in);

}  // namespace geolaw
