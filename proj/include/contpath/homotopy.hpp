// Copyright 2026 contpath contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef CONTPATH_HOMOTOPY_HPP
#define CONTPATH_HOMOTOPY_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "contpath/bench.hpp"
#include "contpath/rng.hpp"

namespace contpath {

using Objective = std::function<double(std::span<const double>)>;

// A family H(x, t) deforming an easy objective g = H(., 0) into the target
// f = H(., 1). Analytic pieces are optional; estimators fill the gaps.
struct HomotopyProblem {
  int dim = 0;
  std::function<double(std::span<const double>, double)> eval;
  // Analytic gradient in x; empty when only zeroth-order access exists.
  std::function<void(std::span<const double>, double, std::span<double>)> grad_x;
  // Analytic derivative in t (derivative-update SLGH); empty otherwise.
  std::function<double(std::span<const double>, double)> grad_t;
  // Direct query of the original objective f = H(., 1), used by the
  // Gaussian-homotopy gradient estimator which never queries H itself.
  Objective original;
  // Smoothing range of a Gaussian-homotopy family; unset for other families.
  std::optional<double> beta;

  bool has_grad_x() const { return static_cast<bool>(grad_x); }
  bool has_grad_t() const { return static_cast<bool>(grad_t); }
};

// Finite continuation schedule t_0 < t_1 < ... < t_K = 1.
struct Schedule {
  std::vector<double> levels;

  explicit Schedule(std::vector<double> lv);
  std::size_t size() const { return levels.size(); }
};

// uniform(K): K+1 equally spaced levels 0, 1/K, ..., 1. uniform(1) degenerates
// to {1}, i.e. direct optimization of the target.
Schedule make_uniform_schedule(int k);

// Geometric decay of the smoothing level s = 1 - t: starting from
// s = 1 - t_start, s shrinks by gamma until it drops below 1e-3, and t = 1 is
// always appended so the final subproblem is the true objective.
Schedule make_geometric_schedule(double gamma, double t_start = 0.0);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
};

// Monte Carlo estimate of the Gaussian homotopy value
// E[f(x + beta (1-t) u)], u ~ N(0, I_d), with its standard error. Consumes
// n objective queries.
MonteCarloEstimate gh_monte_carlo(const Objective& f, std::span<const double> x, double t, double beta,
                                  int n, RngStream& rng);

// Convex blend H(x, t) = t f(x) + (1-t) g(x); boundary identities hold
// exactly. Optional analytic gradients produce an analytic grad_x.
using VectorGradient = std::function<void(std::span<const double>, std::span<double>)>;
HomotopyProblem blend_homotopy(Objective f, Objective g, int dim, VectorGradient grad_f = nullptr,
                               VectorGradient grad_g = nullptr);

// Gaussian-homotopy family of a 2-d benchmark. Rosenbrock and Himmelblau get
// the closed forms (value, x-gradient, t-derivative); Ackley is evaluable
// only at t = 1 and is otherwise reached through the zeroth-order estimator.
HomotopyProblem make_gh_problem(BenchmarkId id, double beta);

// Degenerate family H(x, t) = f(x) for every t, with the benchmark's analytic
// gradient; this is the plain-gradient-descent view of a benchmark.
HomotopyProblem make_plain_problem(BenchmarkId id);

}  // namespace contpath

#endif  // CONTPATH_HOMOTOPY_HPP
