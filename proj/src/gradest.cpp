// Copyright 2026 contpath contributors
// SPDX-License-Identifier: Apache-2.0
#include "contpath/gradest.hpp"

#include <algorithm>
#include <cmath>

#include "contpath/errors.hpp"

namespace contpath {
namespace {

// Shared one-point estimator so es_grad and gh_zeroth_grad draw identically
// from the same stream.
GradEstimate one_point_gaussian(const std::function<double(std::span<const double>)>& query,
                                std::span<const double> x, double sigma, int k, RngStream& rng) {
  const std::size_t d = x.size();
  GradEstimate est;
  est.grad.assign(d, 0.0);
  const double fx = query(x);
  est.evals_used = 1;
  std::vector<double> u(d), xs(d);
  for (int i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      u[j] = rng.normal();
      xs[j] = x[j] + sigma * u[j];
    }
    const double diff = query(xs) - fx;
    est.evals_used += 1;
    for (std::size_t j = 0; j < d; ++j) est.grad[j] += diff * u[j];
  }
  const double scale = 1.0 / (sigma * k);
  for (double& g : est.grad) g *= scale;
  return est;
}

}  // namespace

GradEstimate finite_diff_grad(const Objective& f, std::span<const double> x, double h) {
  if (!(h > 0.0)) throw InvalidParam("finite_diff_grad: step must be positive");
  const std::size_t d = x.size();
  GradEstimate est;
  est.grad.assign(d, 0.0);
  std::vector<double> xs(x.begin(), x.end());
  for (std::size_t j = 0; j < d; ++j) {
    const double xj = xs[j];
    xs[j] = xj + h;
    const double fp = f(xs);
    xs[j] = xj - h;
    const double fm = f(xs);
    xs[j] = xj;
    est.grad[j] = (fp - fm) / (2.0 * h);
    est.evals_used += 2;
  }
  return est;
}

GradEstimate es_grad(const HomotopyProblem& H, std::span<const double> x, double t, double sigma, int k,
                     RngStream& rng) {
  if (!(sigma > 0.0)) throw InvalidParam("es_grad: sigma must be positive");
  if (k < 1) throw InvalidParam("es_grad: need at least one sample");
  auto query = [&H, t](std::span<const double> p) { return H.eval(p, t); };
  return one_point_gaussian(query, x, sigma, k, rng);
}

GradEstimate gh_zeroth_grad(const Objective& f, std::span<const double> x, double t, double beta, int k,
                            RngStream& rng) {
  if (!(beta > 0.0)) throw InvalidParam("gh_zeroth_grad: beta must be positive");
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidParam("gh_zeroth_grad: t must lie in [0,1]");
  if (k < 1) throw InvalidParam("gh_zeroth_grad: need at least one sample");
  const double sigma = std::max(beta * (1.0 - t), kSigmaFloor);
  return one_point_gaussian(f, x, sigma, k, rng);
}

}  // namespace contpath
