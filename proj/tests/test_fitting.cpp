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

#include "geolaw/error.hpp"
#include "geolaw/fitting.hpp"

namespace geolaw {
namespace {

using V = std::vector<double>;

V range(int lo, int hi) {
  V x;
  for (int i = lo; i <= hi; ++i) x.push_back(i);
  return x;
}

V gamma_curve(const V& x, double c, double a, double b) {
  V y;
  for (double v : x) y.push_back(c * std::pow(v, a) * std::exp(b * v));
  return y;
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

// Ordinary least squares of ln y on (1, ln x, x) by Cramer's rule; used only
// to get the starting SSE of the refinement.
GammaTypeParams log_ols_cramer(const V& x, const V& y) {
  double m[3][3] = {}, r[3] = {};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double row[3] = {1.0, std::log(x[i]), x[i]};
    for (int a = 0; a < 3; ++a) {
      r[a] += row[a] * std::log(y[i]);
      for (int b = 0; b < 3; ++b) m[a][b] += row[a] * row[b];
    }
  }
  const auto det = [](double k[3][3]) {
    return k[0][0] * (k[1][1] * k[2][2] - k[1][2] * k[2][1]) -
           k[0][1] * (k[1][0] * k[2][2] - k[1][2] * k[2][0]) +
           k[0][2] * (k[1][0] * k[2][1] - k[1][1] * k[2][0]);
  };
  const double d = det(m);
  double sol[3];
  for (int c = 0; c < 3; ++c) {
    double k[3][3];
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) k[a][b] = (b == c) ? r[a] : m[a][b];
    sol[c] = det(k) / d;
  }
  return {std::exp(sol[0]), sol[1], sol[2]};
}

TEST(CurveTest, GammaType) {
  EXPECT_DOUBLE_EQ(eval_gamma_type({1, 0, 0}, 5), 1.0);
  EXPECT_NEAR(eval_gamma_type({2, 1, -1}, 1), 2.0 * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(eval_gamma_type({2, 1, -1}, 1), 0.735759, 1e-6);
  EXPECT_NEAR(eval_gamma_type({0.015, -0.737, 2e-5}, 1), 0.0150003, 1e-7);
  EXPECT_THROW(eval_gamma_type({1, 0, 0}, 0), DomainError);
  EXPECT_THROW(eval_gamma_type({1, 0, 0}, -1), DomainError);
}

TEST(CurveTest, GaussianAndZipf) {
  const double mode = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  EXPECT_NEAR(eval_gaussian({0, 1}, 0), mode, 1e-15);
  EXPECT_NEAR(eval_gaussian({3, 1}, 3), 0.398942, 1e-6);
  EXPECT_NEAR(eval_gaussian({0, 2}, 2), 0.5 * mode * std::exp(-0.5), 1e-15);
  EXPECT_NEAR(eval_gaussian({0, 2}, 2), 0.120985, 1e-6);
  EXPECT_DOUBLE_EQ(eval_zipf({1, 1}, 2), 0.5);
  EXPECT_DOUBLE_EQ(eval_zipf({1, 0}, 7), 1.0);
  EXPECT_NEAR(eval_zipf({0.1, 2}, 4), 0.00625, 1e-17);
  EXPECT_THROW(eval_zipf({1, 1}, 0), DomainError);
}

TEST(FitGammaTest, ExactRecovery) {
  const V x = range(1, 50);
  const auto r = fit_gamma_type(x, gamma_curve(x, 0.5, 1.0, -0.2));
  const auto& p = std::get<GammaTypeParams>(r.params);
  EXPECT_LT(rel(p.c, 0.5), 1e-6);
  EXPECT_LT(rel(p.a, 1.0), 1e-6);
  EXPECT_LT(rel(p.b, -0.2), 1e-6);
  EXPECT_GE(r.metrics.r_squared, 1 - 1e-12);
  EXPECT_EQ(r.metrics.quality, FitQuality::strong);
  EXPECT_EQ(r.n_points, 50u);
}

TEST(FitGammaTest, FlatSeries) {
  const V x = range(1, 10);
  const auto r = fit_gamma_type(x, V(10, 0.25));
  const auto& p = std::get<GammaTypeParams>(r.params);
  EXPECT_NEAR(p.c, 0.25, 1e-8);
  EXPECT_NEAR(p.a, 0.0, 1e-8);
  EXPECT_NEAR(p.b, 0.0, 1e-8);
}

TEST(FitGammaTest, Preconditions) {
  EXPECT_THROW(fit_gamma_type(V{1, 2, 3}, V{1, 2, 3}), InsufficientDataError);
  EXPECT_THROW(fit_gamma_type(V{1, 2, 3, 4}, V{1, 0, 3, 4}), DomainError);
  EXPECT_THROW(fit_gamma_type(V{0, 2, 3, 4}, V{1, 2, 3, 4}), DomainError);
  EXPECT_THROW(fit_zipf(V{-1, 2, 3, 4}, V{1, 2, 3, 4}), DomainError);
  EXPECT_THROW(fit_gaussian(V{1, 2, 3}, V{1, 2, 3}), InsufficientDataError);
  EXPECT_NO_THROW(fit_gaussian(V{-2, -1, 0, 1, 2}, V{0.05, 0.24, 0.4, 0.24, 0.05}));
}

TEST(FitGammaTest, RefinementNeverRaisesSse) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> noise(0.0, 0.2);
  for (int trial = 0; trial < 30; ++trial) {
    const V x = range(1, 40);
    V y = gamma_curve(x, 0.3, 0.5, -0.1);
    for (double& v : y) v *= std::exp(noise(rng));
    const auto start = log_ols_cramer(x, y);
    double start_sse = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = y[i] - eval_gamma_type(start, x[i]);
      start_sse += d * d;
    }
    EXPECT_LE(fit_gamma_type(x, y).sse, start_sse * (1 + 1e-12));
  }
}

TEST(FitZipfTest, ExactRecovery) {
  const V x = range(1, 20);
  V y;
  double h = 0;
  for (double v : x) h += 1.0 / v;
  for (double v : x) y.push_back(1.0 / v / h);
  const auto r = fit_zipf(x, y);
  EXPECT_NEAR(std::get<ZipfParams>(r.params).delta, 1.0, 1e-6);
  EXPECT_NEAR(std::get<ZipfParams>(r.params).c, 1.0 / h, 1e-9);
  EXPECT_GE(r.metrics.r_squared, 1 - 1e-12);
}

TEST(FitZipfTest, InferiorOnGammaData) {
  const V x = range(1, 50);
  const V y = gamma_curve(x, 0.5, 1.0, -0.2);
  EXPECT_LT(fit_zipf(x, y).metrics.r_squared, fit_gamma_type(x, y).metrics.r_squared);
}

TEST(FitGaussianTest, ExactRecovery) {
  const V x = range(1, 20);
  V y;
  for (double v : x) y.push_back(eval_gaussian({10, 2}, v));
  const auto r = fit_gaussian(x, y);
  const auto& p = std::get<GaussParams>(r.params);
  EXPECT_NEAR(p.mu, 10.0, 1e-6);
  EXPECT_NEAR(p.sigma, 2.0, 1e-6);
  EXPECT_EQ(p.amplitude, 1.0);
  EXPECT_TRUE(r.converged);
}

TEST(FitGaussianTest, FreeAmplitude) {
  const V x = range(1, 20);
  V y;
  for (double v : x) y.push_back(eval_gaussian({8, 3, 40}, v));
  FitOptions opts;
  opts.free_amplitude = true;
  const auto& p = std::get<GaussParams>(fit_gaussian(x, y, opts).params);
  EXPECT_NEAR(p.mu, 8.0, 1e-6);
  EXPECT_NEAR(p.sigma, 3.0, 1e-6);
  EXPECT_NEAR(p.amplitude, 40.0, 1e-5);
}

TEST(FitGaussianTest, IterationCapReportsNotConverged) {
  const V x = range(1, 30);
  const V y = gamma_curve(x, 0.5, 1.0, -0.2);
  FitOptions opts;
  opts.max_iterations = 1;
  const auto r = fit_gaussian(x, y, opts);
  EXPECT_FALSE(r.converged);
  EXPECT_GT(std::get<GaussParams>(r.params).sigma, 0.0);
}

TEST(FitProperty, GammaNestsZipf) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ua(-1.5, 1.5), ub(-0.3, 0.05), un(0.02, 0.3);
  for (int trial = 0; trial < 50; ++trial) {
    const V x = range(1, 30);
    V y = gamma_curve(x, 1.0, ua(rng), ub(rng));
    std::normal_distribution<double> noise(0.0, un(rng));
    for (double& v : y) v *= std::exp(noise(rng));
    const auto g = fit_gamma_type(x, y);
    const auto z = fit_zipf(x, y);
    EXPECT_LE(g.sse, z.sse + 1e-9) << trial;
  }
}

TEST(CompareFamiliesTest, Ordering) {
  const V x = range(1, 50);
  auto order = compare_families(x, gamma_curve(x, 0.5, 1.0, -0.2));
  ASSERT_EQ(order.size(), 3u);
  EXPECT_EQ(order[0].family, Family::gamma_type);

  const V xz = range(1, 20);
  V yz;
  for (double v : xz) yz.push_back(0.3 / v);
  order = compare_families(xz, yz);
  double rg = 0, rz = 0;
  for (const auto& o : order) {
    if (o.family == Family::gamma_type) rg = o.report->metrics.r_squared;
    if (o.family == Family::zipf) rz = o.report->metrics.r_squared;
  }
  EXPECT_GE(rg, rz - 1e-9);
  EXPECT_GT(rz, 1 - 1e-9);

  V yg;
  for (double v : xz) yg.push_back(eval_gaussian({10, 2}, v));
  EXPECT_EQ(compare_families(xz, yg)[0].family, Family::gaussian);
}

TEST(CompareFamiliesTest, FailuresDoNotAbort) {
  // x includes 0: gamma-type and zipf are undefined there, the gaussian is not.
  const V x{0, 1, 2, 3, 4};
  const V y{0.05, 0.24, 0.4, 0.24, 0.05};
  const auto order = compare_families(x, y);
  ASSERT_EQ(order.size(), 3u);
  EXPECT_EQ(order[0].family, Family::gaussian);
  EXPECT_TRUE(order[0].ok());
  EXPECT_FALSE(order[1].ok());
  EXPECT_FALSE(order[1].error.empty());
  EXPECT_EQ(order[1].family, Family::gamma_type);
  EXPECT_EQ(order[2].family, Family::zipf);
}

}  // namespace
}  // namespace geolaw
