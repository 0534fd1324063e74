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

#include <string_view>
#include <optional>

namespace geolaw {

// y = c * x^a * e^(b x). For a gamma density: c = lambda, a = alpha - 1,
// b = -beta.
struct GammaTypeParams {
  double c = 1.0;
  double a = 0.0;
  double b = 0.0;

  double shape() const { return a + 1.0; }  // alpha
  double rate() const { return -b; }        // beta
};

// Normal density; amplitude multiplies it and is 1 unless fitted freely.
struct GaussParams {
  double mu = 0.0;
  double sigma = 1.0;
  double amplitude = 1.0;
};

// y = c / x^delta
struct ZipfParams {
  double c = 1.0;
  double delta = 1.0;
};

enum class Family { gamma_type, gaussian, zipf };

std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

// Throw DomainError for x <= 0.
double eval_gamma_type(const GammaTypeParams& params, double x);
double eval_zipf(const ZipfParams& params, double x);

double eval_gaussian(const GaussParams& params, double x);

}  // namespace geolaw
