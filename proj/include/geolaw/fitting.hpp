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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "geolaw/curves.hpp"
#include "geolaw/metrics.hpp"
#include "geolaw/stats.hpp"

namespace geolaw {

struct FitMetrics {
  double r_squared = 0.0;
  double kl = 0.0;
  double js = 0.0;
  double mape = 0.0;  // fraction; multiply by 100 for percent
  FitQuality quality = FitQuality::poor;
};

// Metrics of fitted values q against observed p. A constant p has no
// variance; r_squared is then 1 for an exact fit and 0 otherwise.
FitMetrics compute_metrics(std::span<const double> p, std::span<const double> q);

using CurveParams = std::variant<GammaTypeParams, GaussParams, ZipfParams>;

double eval_curve(const CurveParams& params, double x);

struct FitReport {
  Family family = Family::gamma_type;
  CurveParams params;
  FitMetrics metrics;
  double sse = 0.0;
  std::size_t n_points = 0;
  bool converged = true;
  int iterations = 0;
  std::vector<double> fitted;  // curve at each input x
};

struct FitOptions {
  bool free_amplitude = false;  // gaussian only
  int max_iterations = 200;
  int max_step_halvings = 20;
  double relative_tolerance = 1e-10;
};

// Two stages: a closed-form log-space least-squares start, then damped
// Gauss-Newton on the linear-space sum of squared residuals. Steps are only
// accepted when SSE decreases.
//
// The gamma-type fit is also refined from the Zipf solution (b = 0) and the
// lower-SSE result kept, so it never does worse than its Zipf submodel.
//
// Need >= 4 points (InsufficientDataError), y > 0 and, except for the
// gaussian, x > 0 (DomainError).
FitReport fit_gamma_type(std::span<const double> xs, std::span<const double> ys,
                         const FitOptions& options = {});
FitReport fit_zipf(std::span<const double> xs, std::span<const double> ys,
                   const FitOptions& options = {});
FitReport fit_gaussian(std::span<const double> xs, std::span<const double> ys,
                       const FitOptions& options = {});

FitReport fit_family(Family family, std::span<const double> xs, std::span<const double> ys,
                     const FitOptions& options = {});
FitReport fit_family(Family family, const DistributionSeries& series,
                     const FitOptions& options = {});

struct FamilyOutcome {
  Family family;
  std::optional<FitReport> report;
  std::string error;  // set when report is empty

  bool ok() const { return report.has_value(); }
};

inline constexpr Family kAllFamilies[] = {Family::gamma_type, Family::zipf, Family::gaussian};

// Fits every family; successes by descending R^2 (ties: ascending KL), then
// failures in request order.
std::vector<FamilyOutcome> compare_families(std::span<const double> xs,
                                            std::span<const double> ys,
                                            std::span<const Family> families = kAllFamilies,
                                            const FitOptions& options = {});
std::vector<FamilyOutcome> compare_families(const DistributionSeries& series,
                                            std::span<const Family> families = kAllFamilies,
                                            const FitOptions& options = {});

}  // namespace geolaw
