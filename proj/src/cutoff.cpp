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

#include "geolaw/cutoff.hpp"

#include <algorithm>
#include <cmath>

#include "geolaw/error.hpp"

namespace geolaw {

double cutoff_deviation(double o_m, double o_M, double n, double alpha, double beta) {
  return n * std::pow(o_m / o_M, 1.0 / alpha) * std::exp(beta * (o_m - o_M));
}

double cutoff_update(double o_m, double d_e, double n, double alpha) {
  return o_m * std::pow(1.0 + d_e / n, 1.0 / alpha);
}

double cutoff_residual(const CutoffEstimate& e, double alpha, double beta) {
  const double d = cutoff_deviation(e.o_m, e.o_M, e.n_objects, alpha, beta);
  return std::abs(e.o_M - cutoff_update(e.o_m, d, e.n_objects, alpha)) / e.o_M;
}

CutoffEstimate estimate_cutoff(std::span<const double> observed, double alpha, double beta,
                               const CutoffOptions& options) {
  if (alpha == 0.0 || !std::isfinite(alpha)) throw DomainError("alpha must be finite and non-zero");
  if (!std::isfinite(beta)) throw DomainError("beta must be finite");
  if (observed.empty()) throw DomainError("no observed values");
  for (double v : observed) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("observed values must be positive");
  }

  CutoffEstimate est;
  est.o_m = *std::min_element(observed.begin(), observed.end());
  est.oo_M = *std::max_element(observed.begin(), observed.end());
  est.n_objects = options.n_objects.value_or(static_cast<double>(observed.size()));
  if (!(est.n_objects > 0.0)) throw DomainError("N must be positive");
  est.o_M = est.oo_M;

  double d_e_sum = 0.0;
  bool tolerance_met = false;
  bool finite = true;
  for (int it = 0; it < options.max_iterations; ++it) {
    const double d_e = cutoff_deviation(est.o_m, est.o_M, est.n_objects, alpha, beta);
    ++est.iterations;
    d_e_sum += d_e;
    est.d_e = d_e;
    if (!std::isfinite(d_e)) {
      finite = false;
      break;
    }
    double next = cutoff_update(est.o_m, d_e, est.n_objects, alpha);
    if (!std::isfinite(next)) {
      finite = false;
      break;
    }
    next = std::max(next, est.o_m);
    const double change = std::abs(next - est.o_M) / est.o_M;
    est.o_M = next;
    if (change < options.relative_tolerance) {
      tolerance_met = true;
      break;
    }
  }
  est.d_e_mean = d_e_sum / static_cast<double>(est.iterations);
  if (finite) est.d_e = cutoff_deviation(est.o_m, est.o_M, est.n_objects, alpha, beta);
  est.converged = tolerance_met && finite && std::isfinite(est.d_e) &&
                  cutoff_residual(est, alpha, beta) < 1e-6;
  return est;
}

double fl_special_cutoff(const GammaTypeParams& params, double oo_M) {
  if (!(params.b < 0.0)) {
    throw NoMaximumError("frequency-length curve has no interior maximum (b >= 0)");
  }
  const double peak = -params.a / params.b;
  const double lo = std::max(1.0, std::floor(peak));
  const double hi = std::max(1.0, std::ceil(peak));
  const double best = eval_gamma_type(params, hi) > eval_gamma_type(params, lo) ? hi : lo;
  return std::max(oo_M, best);
}

}  // namespace geolaw
