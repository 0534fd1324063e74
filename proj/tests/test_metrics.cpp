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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "geolaw/error.hpp"
#include "geolaw/fitting.hpp"
#include "geolaw/metrics.hpp"
#include "oracles.hpp"

namespace geolaw {
namespace {

using V = std::vector<double>;

TEST(RSquaredTest, Examples) {
  const V p{0.3, 1.7, 2.2, 5.0};
  EXPECT_EQ(r_squared(p, p), 1.0);
  const V mean(4, (0.3 + 1.7 + 2.2 + 5.0) / 4);
  EXPECT_NEAR(r_squared(p, mean), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(r_squared(V{1, 2, 3}, V{1, 2, 4}), 0.5);
}

TEST(RSquaredTest, Errors) {
  EXPECT_THROW(r_squared(V{2, 2, 2}, V{1, 2, 3}), DomainError);
  EXPECT_THROW(r_squared(V{1, 2}, V{1}), DomainError);
  EXPECT_THROW(r_squared(V{1}, V{1}), DomainError);
}

TEST(KlTest, Examples) {
  EXPECT_EQ(kl_divergence(V{0.2, 0.8}, V{0.2, 0.8}), 0.0);
  EXPECT_NEAR(kl_divergence(V{1, 0}, V{0.5, 0.5}), std::numbers::ln2, 1e-15);
  EXPECT_NEAR(kl_divergence(V{0.5, 0.5}, V{0.25, 0.75}),
              0.5 * std::log(2.0) + 0.5 * std::log(2.0 / 3.0), 1e-15);
  EXPECT_NEAR(kl_divergence(V{0.5, 0.5}, V{0.25, 0.75}), 0.143841, 1e-6);
}

TEST(KlTest, NormalizesAndClamps) {
  EXPECT_NEAR(kl_divergence(V{2, 2}, V{1, 3}), kl_divergence(V{0.5, 0.5}, V{0.25, 0.75}), 1e-15);
  // q = 0 where p > 0: clamped to 1e-12, so the result is large but finite.
  const double k = kl_divergence(V{0.5, 0.5}, V{1.0, 0.0});
  EXPECT_TRUE(std::isfinite(k));
  EXPECT_NEAR(k, 0.5 * std::log(0.5 / 1.0) + 0.5 * std::log(0.5 / 1e-12), 1e-9);
  EXPECT_THROW(kl_divergence(V{0, 0}, V{1, 1}), DomainError);
  EXPECT_THROW(kl_divergence(V{1, -1, 3}, V{1, 1, 1}), DomainError);
}

TEST(JsTest, Examples) {
  EXPECT_EQ(js_divergence(V{0.3, 0.7}, V{0.3, 0.7}), 0.0);
  EXPECT_NEAR(js_divergence(V{1, 0}, V{0, 1}), std::numbers::ln2, 1e-15);
  const double expected = 0.5 * std::log(2.0 / 3.0) + 0.25 * std::log(1.0 / 3.0) + std::log(2.0);
  EXPECT_NEAR(js_divergence(V{1, 0}, V{0.5, 0.5}), expected, 1e-15);
  EXPECT_NEAR(js_divergence(V{1, 0}, V{0.5, 0.5}), 0.215762, 1e-6);
}

TEST(MapeTest, Examples) {
  EXPECT_EQ(mape(V{1, 2, 3}, V{1, 2, 3}), 0.0);
  EXPECT_DOUBLE_EQ(mape(V{2, 4}, V{1, 5}), 0.375);
  EXPECT_DOUBLE_EQ(mape(V{0, 2}, V{9, 2}), 0.0);
  EXPECT_THROW(mape(V{0, 0}, V{1, 1}), DomainError);
}

TEST(QualityTest, Thresholds) {
  EXPECT_EQ(quality_from_r_squared(0.95), FitQuality::strong);
  EXPECT_EQ(quality_from_r_squared(0.9), FitQuality::acceptable);
  EXPECT_EQ(quality_from_r_squared(0.85), FitQuality::acceptable);
  EXPECT_EQ(quality_from_r_squared(0.8), FitQuality::poor);
  EXPECT_EQ(quality_from_r_squared(0.5), FitQuality::poor);
}

TEST(MetricsProperty, AgainstBruteForce) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const V p = oracle::random_positive(rng, 10);
    const V q = oracle::random_positive(rng, 10);
    EXPECT_NEAR(r_squared(p, q), oracle::r_squared(p, q), 1e-12);
    EXPECT_NEAR(kl_divergence(p, q), oracle::kl(p, q), 1e-12);
    EXPECT_NEAR(js_divergence(p, q), oracle::js(p, q), 1e-12);
    EXPECT_NEAR(mape(p, q), oracle::mape(p, q), 1e-12);
    EXPECT_NEAR(js_divergence(p, q), js_divergence(q, p), 1e-15);
    EXPECT_GE(kl_divergence(p, q), 0.0);
    EXPECT_LE(r_squared(p, q), 1.0);
  }
}

TEST(MetricsProperty, ComputeMetricsOnConstantObserved) {
  const V flat{0.25, 0.25, 0.25, 0.25};
  const auto exact = compute_metrics(flat, flat);
  EXPECT_EQ(exact.r_squared, 1.0);
  EXPECT_EQ(exact.quality, FitQuality::strong);
  EXPECT_EQ(compute_metrics(flat, V{0.2, 0.3, 0.25, 0.25}).r_squared, 0.0);
}

}  // namespace
}  // namespace geolaw
