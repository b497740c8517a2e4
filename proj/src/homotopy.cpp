// Copyright 2026 contpath contributors
// SPDX-License-Identifier: Apache-2.0
#include "contpath/homotopy.hpp"

#include <cmath>

#include "contpath/errors.hpp"

namespace contpath {

Schedule::Schedule(std::vector<double> lv) : levels(std::move(lv)) {
  if (levels.empty()) throw InvalidParam("schedule needs at least one level");
  if (levels.back() != 1.0) throw InvalidParam("schedule must end at t = 1");
  if (levels.front() < 0.0) throw InvalidParam("schedule levels must start at t >= 0");
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (!(levels[i] > levels[i - 1])) throw InvalidParam("schedule levels must be strictly increasing");
}

Schedule make_uniform_schedule(int k) {
  if (k < 1) throw InvalidParam("uniform schedule needs K >= 1");
  std::vector<double> lv;
  lv.reserve(static_cast<std::size_t>(k) + 1);
  if (k == 1) {
    lv.push_back(1.0);
  } else {
    for (int i = 0; i <= k; ++i) lv.push_back(static_cast<double>(i) / k);
    lv.back() = 1.0;
  }
  return Schedule(std::move(lv));
}

Schedule make_geometric_schedule(double gamma, double t_start) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw InvalidParam("geometric schedule needs gamma in (0,1)");
  if (!(t_start >= 0.0 && t_start < 1.0)) throw InvalidParam("geometric schedule needs t_start in [0,1)");
  std::vector<double> lv;
  double s = 1.0 - t_start;
  while (s >= 1e-3) {
    lv.push_back(1.0 - s);
    s *= gamma;
  }
  lv.push_back(1.0);
  return Schedule(std::move(lv));
}

MonteCarloEstimate gh_monte_carlo(const Objective& f, std::span<const double> x, double t, double beta,
                                  int n, RngStream& rng) {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidParam("gh_monte_carlo: t must lie in [0,1]");
  if (!(beta > 0.0)) throw InvalidParam("gh_monte_carlo: beta must be positive");
  if (n < 2) throw InvalidParam("gh_monte_carlo: need at least 2 samples");
  const double sigma = beta * (1.0 - t);
  const std::size_t d = x.size();
  std::vector<double> xs(d);
  double mean = 0.0, m2 = 0.0;
  for (int i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) xs[j] = x[j] + sigma * rng.normal();
    const double v = f(xs);
    const double delta = v - mean;
    mean += delta / (i + 1);
    m2 += delta * (v - mean);
  }
  const double var = m2 / (n - 1);
  return {mean, std::sqrt(var / n)};
}

HomotopyProblem blend_homotopy(Objective f, Objective g, int dim, VectorGradient grad_f,
                               VectorGradient grad_g) {
  if (dim < 1) throw InvalidParam("blend_homotopy: dim must be positive");
  HomotopyProblem h;
  h.dim = dim;
  h.original = f;
  h.eval = [f, g](std::span<const double> x, double t) {
    if (t == 0.0) return g(x);
    if (t == 1.0) return f(x);
    return t * f(x) + (1.0 - t) * g(x);
  };
  if (grad_f && grad_g) {
    h.grad_x = [grad_f, grad_g, dim](std::span<const double> x, double t, std::span<double> out) {
      std::vector<double> gf(dim), gg(dim);
      grad_f(x, gf);
      grad_g(x, gg);
      for (int i = 0; i < dim; ++i) out[i] = t * gf[i] + (1.0 - t) * gg[i];
    };
  }
  h.grad_t = [f, g](std::span<const double> x, double) { return f(x) - g(x); };
  return h;
}

HomotopyProblem make_gh_problem(BenchmarkId id, double beta) {
  if (!(beta > 0.0)) throw InvalidParam("make_gh_problem: beta must be positive");
  HomotopyProblem h;
  h.dim = 2;
  h.beta = beta;
  h.original = [id](std::span<const double> x) { return eval_benchmark(id, {x[0], x[1]}); };
  if (id == BenchmarkId::ackley) {
    h.eval = [id](std::span<const double> x, double t) {
      if (t != 1.0)
        throw UnsupportedProblem("ackley Gaussian homotopy has no closed form below t = 1");
      return eval_benchmark(id, {x[0], x[1]});
    };
    return h;
  }
  h.eval = [id, beta](std::span<const double> x, double t) {
    return eval_gh_closed(id, {x[0], x[1]}, t, beta);
  };
  h.grad_x = [id, beta](std::span<const double> x, double t, std::span<double> out) {
    const Point2 g = grad_gh_closed(id, {x[0], x[1]}, t, beta);
    out[0] = g.x;
    out[1] = g.y;
  };
  h.grad_t = [id, beta](std::span<const double> x, double t) {
    return gh_closed_dt(id, {x[0], x[1]}, t, beta);
  };
  return h;
}

HomotopyProblem make_plain_problem(BenchmarkId id) {
  HomotopyProblem h;
  h.dim = 2;
  h.original = [id](std::span<const double> x) { return eval_benchmark(id, {x[0], x[1]}); };
  h.eval = [id](std::span<const double> x, double) { return eval_benchmark(id, {x[0], x[1]}); };
  h.grad_x = [id](std::span<const double> x, double, std::span<double> out) {
    const Point2 g = grad_benchmark(id, {x[0], x[1]});
    out[0] = g.x;
    out[1] = g.y;
  };
  return h;
}

}  // namespace contpath
