// Copyright 2026 contpath contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef CONTPATH_BENCH_HPP
#define CONTPATH_BENCH_HPP

#include <string>

#include "contpath/errors.hpp"

namespace contpath {

// A point of the two-dimensional benchmark domain. Construction rejects
// non-finite coordinates.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2() = default;
  Point2(double x_, double y_);
};

enum class BenchmarkId { ackley, rosenbrock, himmelblau };

const char* to_string(BenchmarkId id);
BenchmarkId benchmark_from_string(const std::string& name);

// Objective value of the chosen benchmark.
//   ackley      -20 exp(-0.2 sqrt(0.5(x^2+y^2))) - exp(0.5(cos 2pi x + cos 2pi y)) + e + 20
//   rosenbrock  100 (y - x^2)^2 + (1 - x)^2
//   himmelblau  (x^2 + y - 11)^2 + (x + y^2 - 7)^2
double eval_benchmark(BenchmarkId id, Point2 p);

// Analytic gradient. Throws SingularGradient at the Ackley origin, where the
// surface has a non-smooth minimum.
Point2 grad_benchmark(BenchmarkId id, Point2 p);

// Closed-form Gaussian-smoothed surrogate GH(p, t) with smoothing
// sigma = beta (1 - t). Available for rosenbrock and himmelblau only; the
// quartic term of the rosenbrock form carries (1-t)^4 (the degree the
// expansion of E[f(p + sigma u)] requires). Throws UnsupportedProblem for
// ackley.
double eval_gh_closed(BenchmarkId id, Point2 p, double t, double beta);

// Gradient of eval_gh_closed in (x, y).
Point2 grad_gh_closed(BenchmarkId id, Point2 p, double t, double beta);

// Derivative of eval_gh_closed with respect to the homotopy level t; used by
// the derivative-update SLGH variant.
double gh_closed_dt(BenchmarkId id, Point2 p, double t, double beta);

// Known global minimizer (one of them for himmelblau).
Point2 benchmark_minimizer(BenchmarkId id);

}  // namespace contpath

#endif  // CONTPATH_BENCH_HPP
