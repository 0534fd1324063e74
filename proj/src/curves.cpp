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

#include "geolaw/curves.hpp"

#include <cmath>
#include <numbers>

#include "geolaw/error.hpp"

namespace geolaw {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::gamma_type: return "gamma_type";
    case Family::gaussian: return "gaussian";
    case Family::zipf: return "zipf";
  }
  return "";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "gamma_type" || name == "gamma") return Family::gamma_type;
  if (name == "gaussian" || name == "gauss") return Family::gaussian;
  if (name == "zipf") return Family::zipf;
  return std::nullopt;
}

double eval_gamma_type(const GammaTypeParams& params, double x) {
  if (!(x > 0.0)) throw DomainError("gamma-type curve is defined for x > 0");
  return params.c * std::pow(x, params.a) * std::exp(params.b * x);
}

double eval_zipf(const ZipfParams& params, double x) {
  if (!(x > 0.0)) throw DomainError("zipf curve is defined for x > 0");
  return params.c / std::pow(x, params.delta);
}

double eval_gaussian(const GaussParams& params, double x) {
  const double z = (x - params.mu) / params.sigma;
  return params.amplitude * std::exp(-0.5 * z * z) /
         (std::sqrt(2.0 * std::numbers::pi) * params.sigma);
}

}  // namespace geolaw
