// Copyright 2026 contpath contributors
// SPDX-License-Identifier: Apache-2.0
#include "contpath/bench.hpp"

#include <cmath>

namespace contpath {

Point2::Point2(double x_, double y_) : x(x_), y(y_) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw InvalidParam("Point2 requires finite coordinates");
}

const char* to_string(BenchmarkId id) {
  switch (id) {
    case BenchmarkId::ackley: return "ackley";
    case BenchmarkId::rosenbrock: return "rosenbrock";
    case BenchmarkId::himmelblau: return "himmelblau";
  }
  return "?";
}

BenchmarkId benchmark_from_string(const std::string& name) {
  if (name == "ackley") return BenchmarkId::ackley;
  if (name == "rosenbrock") return BenchmarkId::rosenbrock;
  if (name == "himmelblau") return BenchmarkId::himmelblau;
  throw InvalidParam("unknown benchmark: " + name);
}

double eval_benchmark(BenchmarkId id, Point2 p) {
  const double x = p.x, y = p.y;
  switch (id) {
    case BenchmarkId::ackley: {
      const double r = std::sqrt(0.5 * (x * x + y * y));
      const double c = 0.5 * (std::cos(2.0 * M_PI * x) + std::cos(2.0 * M_PI * y));
      return -20.0 * std::exp(-0.2 * r) - std::exp(c) + M_E + 20.0;
    }
    case BenchmarkId::rosenbrock: {
      const double a = y - x * x;
      const double b = 1.0 - x;
      return 100.0 * a * a + b * b;
    }
    case BenchmarkId::himmelblau: {
      const double a = x * x + y - 11.0;
      const double b = x + y * y - 7.0;
      return a * a + b * b;
    }
  }
  return 0.0;
}

Point2 grad_benchmark(BenchmarkId id, Point2 p) {
  const double x = p.x, y = p.y;
  switch (id) {
    case BenchmarkId::ackley: {
      const double r = std::sqrt(0.5 * (x * x + y * y));
      if (r == 0.0) throw SingularGradient("ackley gradient is singular at the origin");
      const double e1 = std::exp(-0.2 * r);
      const double e2 = std::exp(0.5 * (std::cos(2.0 * M_PI * x) + std::cos(2.0 * M_PI * y)));
      const double gx = 4.0 * e1 * (0.5 * x / r) + M_PI * std::sin(2.0 * M_PI * x) * e2;
      const double gy = 4.0 * e1 * (0.5 * y / r) + M_PI * std::sin(2.0 * M_PI * y) * e2;
      return {gx, gy};
    }
    case BenchmarkId::rosenbrock: {
      const double a = y - x * x;
      return {-400.0 * x * a - 2.0 * (1.0 - x), 200.0 * a};
    }
    case BenchmarkId::himmelblau: {
      const double a = x * x + y - 11.0;
      const double b = x + y * y - 7.0;
      return {4.0 * x * a + 2.0 * b, 2.0 * a + 4.0 * y * b};
    }
  }
  return {0.0, 0.0};
}

namespace {

void require_gh(BenchmarkId id, double t, double beta) {
  if (id == BenchmarkId::ackley)
    throw UnsupportedProblem("ackley has no closed-form Gaussian smoothing; use the Monte Carlo estimate");
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidParam("homotopy level t must lie in [0,1]");
  if (!(beta > 0.0)) throw InvalidParam("beta must be positive");
}

}  // namespace

double eval_gh_closed(BenchmarkId id, Point2 p, double t, double beta) {
  require_gh(id, t, beta);
  const double x = p.x, y = p.y;
  const double s2 = beta * beta * (1.0 - t) * (1.0 - t);  // sigma^2
  const double s4 = s2 * s2;
  if (id == BenchmarkId::rosenbrock) {
    return 100.0 * x * x * x * x + (-200.0 * y + 600.0 * s2 + 1.0) * x * x - 2.0 * x + 100.0 * y * y -
           200.0 * s2 * y + 300.0 * s4 + 101.0 * s2 + 1.0;
  }
  return x * x * x * x + (2.0 * y + 6.0 * s2 - 21.0) * x * x + (2.0 * y * y + 2.0 * s2 - 14.0) * x +
         y * y * y * y + (6.0 * s2 - 13.0) * y * y + (2.0 * s2 - 22.0) * y + 6.0 * s4 - 34.0 * s2 + 170.0;
}

Point2 grad_gh_closed(BenchmarkId id, Point2 p, double t, double beta) {
  require_gh(id, t, beta);
  const double x = p.x, y = p.y;
  const double s2 = beta * beta * (1.0 - t) * (1.0 - t);
  if (id == BenchmarkId::rosenbrock) {
    return {400.0 * x * x * x + 2.0 * x * (-200.0 * y + 600.0 * s2 + 1.0) - 2.0,
            -200.0 * x * x + 200.0 * y - 200.0 * s2};
  }
  return {4.0 * x * x * x + 2.0 * x * (2.0 * y + 6.0 * s2 - 21.0) + 2.0 * y * y + 2.0 * s2 - 14.0,
          2.0 * x * x + 4.0 * x * y + 4.0 * y * y * y + 2.0 * y * (6.0 * s2 - 13.0) + 2.0 * s2 - 22.0};
}

double gh_closed_dt(BenchmarkId id, Point2 p, double t, double beta) {
  require_gh(id, t, beta);
  const double x = p.x, y = p.y;
  const double u = 1.0 - t;
  const double ds2 = -2.0 * beta * beta * u;          // d sigma^2 / dt
  const double ds4 = -4.0 * beta * beta * beta * beta * u * u * u;
  if (id == BenchmarkId::rosenbrock) {
    return (600.0 * x * x - 200.0 * y + 101.0) * ds2 + 300.0 * ds4;
  }
  return (6.0 * x * x + 2.0 * x + 6.0 * y * y + 2.0 * y - 34.0) * ds2 + 6.0 * ds4;
}

Point2 benchmark_minimizer(BenchmarkId id) {
  switch (id) {
    case BenchmarkId::ackley: return {0.0, 0.0};
    case BenchmarkId::rosenbrock: return {1.0, 1.0};
    case BenchmarkId::himmelblau: return {3.0, 2.0};
  }
  return {0.0, 0.0};
}

}  // namespace contpath
