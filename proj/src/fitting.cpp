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

#include "geolaw/fitting.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "geolaw/error.hpp"

namespace geolaw {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr std::size_t kMinPoints = 4;
const double kLogSigmaFloor = std::log(1e-9);

// Evaluates the model at x and writes d model / d theta into grad.
using Model = std::function<double(const VectorXd& theta, double x, double* grad)>;
using Clamp = std::function<void(VectorXd& theta)>;

struct GaussNewtonResult {
  VectorXd theta;
  double sse;
  int iterations = 0;
  bool converged = false;
};

double sum_squares(const VectorXd& theta, std::span<const double> xs, std::span<const double> ys,
                   const Model& model) {
  double sse = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - model(theta, xs[i], nullptr);
    sse += r * r;
  }
  return std::isfinite(sse) ? sse : std::numeric_limits<double>::infinity();
}

GaussNewtonResult gauss_newton(std::span<const double> xs, std::span<const double> ys,
                               VectorXd theta, const Model& model, const Clamp& clamp,
                               const FitOptions& options) {
  const auto n = static_cast<Eigen::Index>(xs.size());
  const Eigen::Index k = theta.size();
  clamp(theta);
  GaussNewtonResult result{theta, sum_squares(theta, xs, ys, model)};
  MatrixXd jac(n, k);
  VectorXd resid(n);
  std::vector<double> grad(static_cast<std::size_t>(k));

  if (!std::isfinite(result.sse)) return result;
  if (result.sse == 0.0) {
    result.converged = true;
    return result;
  }
  for (int it = 0; it < options.max_iterations; ++it) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      resid(i) = ys[ui] - model(result.theta, xs[ui], grad.data());
      for (Eigen::Index j = 0; j < k; ++j) jac(i, j) = grad[static_cast<std::size_t>(j)];
    }
    const VectorXd delta = jac.colPivHouseholderQr().solve(resid);
    if (!delta.allFinite()) {
      result.converged = true;
      return result;
    }
    double step = 1.0;
    bool accepted = false;
    VectorXd candidate;
    double candidate_sse = 0.0;
    for (int h = 0; h <= options.max_step_halvings; ++h, step *= 0.5) {
      candidate = result.theta + step * delta;
      clamp(candidate);
      candidate_sse = sum_squares(candidate, xs, ys, model);
      if (candidate_sse < result.sse) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      // No descent along the Gauss-Newton direction: a stationary point.
      result.converged = true;
      return result;
    }
    const double change = (result.sse - candidate_sse) / result.sse;
    result.theta = candidate;
    result.sse = candidate_sse;
    result.iterations = it + 1;
    if (change < options.relative_tolerance || candidate_sse == 0.0) {
      result.converged = true;
      return result;
    }
  }
  return result;
}

void check_inputs(std::span<const double> xs, std::span<const double> ys, bool positive_x) {
  if (xs.size() != ys.size()) throw DomainError("x and y differ in length");
  if (xs.size() < kMinPoints) {
    throw InsufficientDataError("fitting needs at least 4 points, got " +
                                std::to_string(xs.size()));
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) throw DomainError("non-finite point");
    if (positive_x && !(xs[i] > 0.0)) throw DomainError("x must be positive");
    if (!(ys[i] > 0.0)) throw DomainError("y must be positive");
  }
}

bool constant(std::span<const double> ys) {
  return std::all_of(ys.begin(), ys.end(), [&](double y) { return y == ys.front(); });
}

// Least squares for log y = design * theta through the normal equations.
VectorXd log_space_ols(const MatrixXd& design, std::span<const double> ys) {
  VectorXd logy(static_cast<Eigen::Index>(ys.size()));
  for (std::size_t i = 0; i < ys.size(); ++i) logy(static_cast<Eigen::Index>(i)) = std::log(ys[i]);
  const MatrixXd normal = design.transpose() * design;
  const VectorXd rhs = design.transpose() * logy;
  return normal.ldlt().solve(rhs);
}

FitReport finish(Family family, CurveParams params, std::span<const double> xs,
                 std::span<const double> ys, int iterations, bool converged) {
  FitReport report;
  report.family = family;
  report.params = params;
  report.n_points = xs.size();
  report.iterations = iterations;
  report.converged = converged;
  report.fitted.reserve(xs.size());
  report.sse = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = eval_curve(params, xs[i]);
    report.fitted.push_back(f);
    report.sse += (ys[i] - f) * (ys[i] - f);
  }
  report.metrics = compute_metrics(ys, report.fitted);
  return report;
}

// theta = (ln c, a, b)
double gamma_model(const VectorXd& t, double x, double* grad) {
  const double lx = std::log(x);
  const double m = std::exp(t(0) + t(1) * lx + t(2) * x);
  if (grad) {
    grad[0] = m;
    grad[1] = m * lx;
    grad[2] = m * x;
  }
  return m;
}

// theta = (ln c, delta)
double zipf_model(const VectorXd& t, double x, double* grad) {
  const double lx = std::log(x);
  const double m = std::exp(t(0) - t(1) * lx);
  if (grad) {
    grad[0] = m;
    grad[1] = -m * lx;
  }
  return m;
}

// theta = (mu, ln sigma[, ln amplitude])
double gauss_model(const VectorXd& t, double x, double* grad) {
  const double sigma = std::exp(t(1));
  const double z = (x - t(0)) / sigma;
  const double log_amp = t.size() > 2 ? t(2) : 0.0;
  const double m =
      std::exp(log_amp - 0.5 * z * z) / (std::sqrt(2.0 * std::numbers::pi) * sigma);
  if (grad) {
    grad[0] = m * z / sigma;
    grad[1] = m * (z * z - 1.0);
    if (t.size() > 2) grad[2] = m;
  }
  return m;
}

void no_clamp(VectorXd&) {}

void clamp_sigma(VectorXd& t) { t(1) = std::max(t(1), kLogSigmaFloor); }

struct ZipfSolution {
  VectorXd theta;
  int iterations;
  bool converged;
};

ZipfSolution solve_zipf(std::span<const double> xs, std::span<const double> ys,
                        const FitOptions& options) {
  if (constant(ys)) return {VectorXd{{std::log(ys.front()), 0.0}}, 0, true};
  MatrixXd design(static_cast<Eigen::Index>(xs.size()), 2);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    design(static_cast<Eigen::Index>(i), 0) = 1.0;
    design(static_cast<Eigen::Index>(i), 1) = -std::log(xs[i]);
  }
  const VectorXd start = log_space_ols(design, ys);
  const auto gn = gauss_newton(xs, ys, start, zipf_model, no_clamp, options);
  return {gn.theta, gn.iterations, gn.converged};
}

}  // namespace

FitMetrics compute_metrics(std::span<const double> p, std::span<const double> q) {
  FitMetrics m;
  if (constant(p)) {
    bool exact = true;
    for (std::size_t i = 0; i < p.size(); ++i) exact = exact && p[i] == q[i];
    m.r_squared = exact ? 1.0 : 0.0;
  } else {
    m.r_squared = r_squared(p, q);
  }
  m.kl = kl_divergence(p, q);
  m.js = js_divergence(p, q);
  m.mape = mape(p, q);
  m.quality = quality_from_r_squared(m.r_squared);
  return m;
}

double eval_curve(const CurveParams& params, double x) {
  return std::visit(
      [x](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GammaTypeParams>) {
          return eval_gamma_type(p, x);
        } else if constexpr (std::is_same_v<T, ZipfParams>) {
          return eval_zipf(p, x);
        } else {
          return eval_gaussian(p, x);
        }
      },
      params);
}

FitReport fit_zipf(std::span<const double> xs, std::span<const double> ys,
                   const FitOptions& options) {
  check_inputs(xs, ys, true);
  const auto sol = solve_zipf(xs, ys, options);
  return finish(Family::zipf, ZipfParams{std::exp(sol.theta(0)), sol.theta(1)}, xs, ys,
                sol.iterations, sol.converged);
}

FitReport fit_gamma_type(std::span<const double> xs, std::span<const double> ys,
                         const FitOptions& options) {
  check_inputs(xs, ys, true);
  if (constant(ys)) return finish(Family::gamma_type, GammaTypeParams{ys.front(), 0.0, 0.0}, xs, ys, 0, true);

  MatrixXd design(static_cast<Eigen::Index>(xs.size()), 3);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    design(r, 0) = 1.0;
    design(r, 1) = std::log(xs[i]);
    design(r, 2) = xs[i];
  }
  auto best = gauss_newton(xs, ys, log_space_ols(design, ys), gamma_model, no_clamp, options);

  const auto zipf = solve_zipf(xs, ys, options);
  const VectorXd nested{{zipf.theta(0), -zipf.theta(1), 0.0}};
  auto from_zipf = gauss_newton(xs, ys, nested, gamma_model, no_clamp, options);
  if (from_zipf.sse < best.sse) best = std::move(from_zipf);

  return finish(Family::gamma_type,
                GammaTypeParams{std::exp(best.theta(0)), best.theta(1), best.theta(2)}, xs, ys,
                best.iterations, best.converged);
}

FitReport fit_gaussian(std::span<const double> xs, std::span<const double> ys,
                       const FitOptions& options) {
  check_inputs(xs, ys, false);
  double wsum = 0.0;
  double mean = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    wsum += ys[i];
    mean += ys[i] * xs[i];
  }
  mean /= wsum;
  double var = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) var += ys[i] * (xs[i] - mean) * (xs[i] - mean);
  var /= wsum;
  const double sigma0 = std::max(std::sqrt(var), 1e-9);

  VectorXd start(options.free_amplitude ? 3 : 2);
  start(0) = mean;
  start(1) = std::log(sigma0);
  if (options.free_amplitude) {
    // Amplitude that matches the curve's area to the series' sum.
    start(2) = std::log(wsum);
  }
  const auto gn = gauss_newton(xs, ys, start, gauss_model, clamp_sigma, options);
  GaussParams params{gn.theta(0), std::max(std::exp(gn.theta(1)), 1e-9),
                     options.free_amplitude ? std::exp(gn.theta(2)) : 1.0};
  return finish(Family::gaussian, params, xs, ys, gn.iterations, gn.converged);
}

FitReport fit_family(Family family, std::span<const double> xs, std::span<const double> ys,
                     const FitOptions& options) {
  switch (family) {
    case Family::gamma_type: return fit_gamma_type(xs, ys, options);
    case Family::zipf: return fit_zipf(xs, ys, options);
    case Family::gaussian: return fit_gaussian(xs, ys, options);
  }
  throw DomainError("unknown family");
}

FitReport fit_family(Family family, const DistributionSeries& series, const FitOptions& options) {
  const auto xs = series.xs();
  const auto ys = series.ys();
  return fit_family(family, xs, ys, options);
}

std::vector<FamilyOutcome> compare_families(std::span<const double> xs,
                                            std::span<const double> ys,
                                            std::span<const Family> families,
                                            const FitOptions& options) {
  std::vector<FamilyOutcome> ok;
  std::vector<FamilyOutcome> failed;
  for (Family family : families) {
    try {
      ok.push_back({family, fit_family(family, xs, ys, options), {}});
    } catch (const Error& e) {
      failed.push_back({family, std::nullopt, e.what()});
    }
  }
  std::stable_sort(ok.begin(), ok.end(), [](const FamilyOutcome& a, const FamilyOutcome& b) {
    const auto& ma = a.report->metrics;
    const auto& mb = b.report->metrics;
    if (ma.r_squared != mb.r_squared) return ma.r_squared > mb.r_squared;
    return ma.kl < mb.kl;
  });
  ok.insert(ok.end(), std::make_move_iterator(failed.begin()),
            std::make_move_iterator(failed.end()));
  return ok;
}

std::vector<FamilyOutcome> compare_families(const DistributionSeries& series,
                                            std::span<const Family> families,
                                            const FitOptions& options) {
  const auto xs = series.xs();
  const auto ys = series.ys();
  return compare_families(xs, ys, families, options);
}

}  // namespace geolaw
