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

#include "geolaw/metrics.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "geolaw/error.hpp"

namespace geolaw {
namespace {

void require_same_size(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw DomainError("metric inputs differ in length");
}

std::vector<double> normalized(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) {
    if (!(x >= 0.0)) throw DomainError("divergence inputs must be non-negative");
    sum += x;
  }
  if (sum <= 0.0) throw DomainError("divergence input sums to zero");
  std::vector<double> out(v.begin(), v.end());
  for (double& x : out) x /= sum;
  return out;
}

}  // namespace

double r_squared(std::span<const double> p, std::span<const double> q) {
  require_same_size(p, q);
  if (p.size() < 2) throw DomainError("r_squared needs at least two points");
  double mean = 0.0;
  for (double x : p) mean += x;
  mean /= static_cast<double>(p.size());
  double sse = 0.0;
  double sst = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sse += (p[i] - q[i]) * (p[i] - q[i]);
    sst += (p[i] - mean) * (p[i] - mean);
  }
  if (sst == 0.0) throw DomainError("r_squared undefined: observed values are constant");
  return 1.0 - sse / sst;
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
  require_same_size(p, q);
  const auto pn = normalized(p);
  auto qn = normalized(q);
  double sum = 0.0;
  bool clamped = false;
  for (double& x : qn) {
    if (x < kDivergenceClamp) {
      x = kDivergenceClamp;
      clamped = true;
    }
    sum += x;
  }
  // Renormalizing an unclamped q by a sum within an ulp of 1 would only add
  // rounding noise, and kl(p, p) must be exactly zero.
  if (clamped) {
    for (double& x : qn) x /= sum;
  }
  double kl = 0.0;
  for (std::size_t i = 0; i < pn.size(); ++i) {
    if (pn[i] > 0.0) kl += pn[i] * std::log(pn[i] / qn[i]);
  }
  return kl < 0.0 ? 0.0 : kl;
}

double js_divergence(std::span<const double> p, std::span<const double> q) {
  require_same_size(p, q);
  const auto pn = normalized(p);
  const auto qn = normalized(q);
  // The ln 2 term is folded into each summand (both inputs sum to 1), which
  // makes js(p, p) exactly zero.
  double js = 0.0;
  for (std::size_t i = 0; i < pn.size(); ++i) {
    const double m = pn[i] + qn[i];
    if (pn[i] > 0.0) js += 0.5 * pn[i] * std::log(2.0 * pn[i] / m);
    if (qn[i] > 0.0) js += 0.5 * qn[i] * std::log(2.0 * qn[i] / m);
  }
  if (js > std::numbers::ln2) js = std::numbers::ln2;
  return js < 0.0 ? 0.0 : js;
}

double mape(std::span<const double> p, std::span<const double> q) {
  require_same_size(p, q);
  double sum = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    sum += std::abs((q[i] - p[i]) / p[i]);
    ++n;
  }
  if (n == 0) throw DomainError("mape undefined: every observed value is zero");
  return sum / static_cast<double>(n);
}

FitQuality quality_from_r_squared(double r2) {
  if (r2 > 0.9) return FitQuality::strong;
  if (r2 > 0.8) return FitQuality::acceptable;
  return FitQuality::poor;
}

std::string_view quality_name(FitQuality quality) {
  switch (quality) {
    case FitQuality::strong: return "strong";
    case FitQuality::acceptable: return "acceptable";
    case FitQuality::poor: return "poor";
  }
  return "";
}

}  // namespace geolaw
