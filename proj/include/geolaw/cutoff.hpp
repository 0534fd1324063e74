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

#include "geolaw/curves.hpp"

namespace geolaw {

// Upper-cutoff estimate for one dimension. o_m and oo_M are the smallest and
// largest observed values; o_M is the fixed point of the deviation update.
struct CutoffEstimate {
  double o_m = 0.0;
  double oo_M = 0.0;
  double o_M = 0.0;
  double d_e = 0.0;       // deviation at the final iterate; may be +inf
  double d_e_mean = 0.0;  // mean deviation over all iterates
  double n_objects = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct CutoffOptions {
  // Overrides N; defaults to the number of observed values.
  std::optional<double> n_objects;
  double relative_tolerance = 1e-9;
  int max_iterations = 10000;
};

// D_e = N (o_m / o_M)^(1/alpha) e^(beta (o_m - o_M))
double cutoff_deviation(double o_m, double o_M, double n, double alpha, double beta);
// o_M = o_m (1 + D_e / N)^(1/alpha)
double cutoff_update(double o_m, double d_e, double n, double alpha);

// Relative residual |o_M - update(deviation(o_M))| / o_M.
double cutoff_residual(const CutoffEstimate& estimate, double alpha, double beta);

// Iterates deviation then update from o_M = max(observed). Non-finite
// iterates end the run with converged = false and the last finite o_M.
// Throws DomainError for alpha == 0, empty input or non-positive values.
CutoffEstimate estimate_cutoff(std::span<const double> observed, double alpha, double beta,
                               const CutoffOptions& options = {});

inline CutoffEstimate estimate_cutoff(std::span<const double> observed,
                                      const GammaTypeParams& fitted,
                                      const CutoffOptions& options = {}) {
  return estimate_cutoff(observed, fitted.shape(), fitted.rate(), options);
}

// max(oo_M, l*) where l* is the positive integer maximizing the fitted
// frequency-length curve. Throws NoMaximumError when b >= 0.
double fl_special_cutoff(const GammaTypeParams& params, double oo_M);

}  // namespace geolaw
