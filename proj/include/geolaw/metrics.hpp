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

#include <span>
#include <string_view>

namespace geolaw {

// Goodness-of-fit measures between observed values p and fitted values q.
// All logarithms are natural.

inline constexpr double kDivergenceClamp = 1e-12;

// 1 - SSE/SST. Throws DomainError when p is constant or sizes differ.
double r_squared(std::span<const double> p, std::span<const double> q);

// Both vectors are normalized to sum 1; q entries below kDivergenceClamp are
// raised to it and q renormalized. Terms with p_i = 0 contribute nothing.
double kl_divergence(std::span<const double> p, std::span<const double> q);

// Bounded by ln 2. Zero-numerator terms contribute nothing.
double js_divergence(std::span<const double> p, std::span<const double> q);

// Mean of |q_i - p_i| / |p_i| over points with p_i != 0, as a fraction.
double mape(std::span<const double> p, std::span<const double> q);

enum class FitQuality { strong, acceptable, poor };

FitQuality quality_from_r_squared(double r2);
std::string_view quality_name(FitQuality quality);

}  // namespace geolaw
