// Copyright 2026 contpath contributors
// SPDX-License-Identifier: Apache-2.0
#include "contpath/optimizers.hpp"

#include <algorithm>
#include <cmath>

#include "contpath/errors.hpp"

namespace contpath {
namespace {

bool all_finite(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

std::int64_t grad_cost(const HomotopyProblem& H, const GradOracle& oracle) {
  if (H.has_grad_x()) return 1;
  return static_cast<std::int64_t>(oracle.samples) + 1;
}

// One x-gradient of H at (x, t); charges the budget for exactly the queries
// made.
void query_grad(const HomotopyProblem& H, std::span<const double> x, double t, const GradOracle& oracle,
                Budget& budget, RngStream& rng, std::span<double> out) {
  if (H.has_grad_x()) {
    budget.consume(1);
    H.grad_x(x, t, out);
    return;
  }
  GradEstimate est;
  if (oracle.kind == GradOracle::Kind::es) {
    est = es_grad(H, x, t, oracle.sigma, oracle.samples, rng);
  } else {
    if (!H.beta) throw InvalidParam("zeroth-order gradient needs the problem's beta");
    est = gh_zeroth_grad(H.original, x, t, *H.beta, oracle.samples, rng);
  }
  budget.consume(est.evals_used);
  std::copy(est.grad.begin(), est.grad.end(), out.begin());
}

struct DescentState {
  std::vector<double> x;
  std::int64_t iters = 0;
};

// Fixed-level descent loop shared by gradient_descent and the inner solver of
// classical_homotopy. Runs while both the global budget (minus `reserve`)
// and the local `quota` allow another gradient query.
void descend(const HomotopyProblem& H, double t, double eta, const GdConfig& cfg, Budget& budget,
             std::int64_t quota, std::int64_t reserve, RngStream& rng, const Monitor& monitor,
             RunTrace& trace, DescentState& st) {
  const std::int64_t cost = grad_cost(H, cfg.oracle);
  std::vector<double> g(st.x.size());
  std::int64_t spent = 0;
  while (spent + cost <= quota && budget.remaining() >= cost + reserve) {
    query_grad(H, st.x, t, cfg.oracle, budget, rng, g);
    spent += cost;
    if (norm2(g) < cfg.grad_tol) break;
    for (std::size_t i = 0; i < st.x.size(); ++i) st.x[i] -= eta * g[i];
    ++st.iters;
    if (!all_finite(st.x)) {
      for (std::size_t i = 0; i < st.x.size(); ++i) st.x[i] += eta * g[i];
      throw NonFiniteIterate(st.x);
    }
    if (monitor) trace.record(st.iters, budget.used(), t, monitor(st.x));
  }
}

double final_eval(const HomotopyProblem& H, std::span<const double> x, Budget& budget) {
  budget.consume(1);
  return H.eval(x, 1.0);
}

}  // namespace

OptimizerResult gradient_descent(const HomotopyProblem& H, std::span<const double> x0, double t_fixed,
                                 const GdConfig& cfg, Budget& budget, RngStream& rng,
                                 const Monitor& monitor) {
  if (!(cfg.eta > 0.0)) throw InvalidParam("gradient_descent: eta must be positive");
  OptimizerResult res;
  const std::int64_t start_used = budget.used();
  DescentState st{std::vector<double>(x0.begin(), x0.end()), 0};
  descend(H, t_fixed, cfg.eta, cfg, budget, budget.limit(), 1, rng, monitor, res.trace, st);
  res.x_final = std::move(st.x);
  res.f_final = final_eval(H, res.x_final, budget);
  if (monitor) res.trace.record(st.iters + 1, budget.used(), 1.0, res.f_final);
  res.budget_used = budget.used() - start_used;
  return res;
}

OptimizerResult classical_homotopy(const HomotopyProblem& H, const Schedule& schedule,
                                   const ClassicalConfig& cfg, std::span<const double> x0, Budget& budget,
                                   RngStream& rng, const Monitor& monitor) {
  if (!(cfg.inner.eta > 0.0)) throw InvalidParam("classical_homotopy: eta must be positive");
  if (cfg.first_level_fraction < 0.0 || cfg.first_level_fraction >= 1.0)
    throw InvalidParam("classical_homotopy: first_level_fraction must lie in [0,1)");
  const std::int64_t levels = static_cast<std::int64_t>(schedule.size());
  const std::int64_t total = budget.remaining() - 1;  // final re-evaluation
  std::vector<std::int64_t> quotas(levels, 0);
  if (cfg.first_level_fraction > 0.0 && levels > 1) {
    quotas[0] = static_cast<std::int64_t>(static_cast<double>(total) * cfg.first_level_fraction);
    const std::int64_t rest = (total - quotas[0]) / (levels - 1);
    for (std::int64_t i = 1; i < levels; ++i) quotas[i] = rest;
  } else {
    for (std::int64_t i = 0; i < levels; ++i) quotas[i] = total / levels;
  }

  OptimizerResult res;
  const std::int64_t start_used = budget.used();
  DescentState st{std::vector<double>(x0.begin(), x0.end()), 0};
  for (std::int64_t li = 0; li < levels; ++li) {
    const double t = schedule.levels[static_cast<std::size_t>(li)];
    double eta = cfg.inner.eta;
    if (cfg.step_scale == ClassicalConfig::StepScale::smoothing_sq) {
      if (!H.beta) throw InvalidParam("smoothing_sq step scale needs the problem's beta");
      const double sigma = std::max(*H.beta * (1.0 - t), kSigmaFloor);
      eta *= std::max(sigma * sigma, cfg.step_scale_floor) / (*H.beta * *H.beta);
    }
    descend(H, t, eta, cfg.inner, budget, quotas[static_cast<std::size_t>(li)], 1, rng, monitor,
            res.trace, st);
  }
  res.x_final = std::move(st.x);
  res.f_final = final_eval(H, res.x_final, budget);
  if (monitor) res.trace.record(st.iters + 1, budget.used(), 1.0, res.f_final);
  res.budget_used = budget.used() - start_used;
  return res;
}

OptimizerResult slgh(const HomotopyProblem& H, const SlghConfig& cfg, std::span<const double> x0,
                     Budget& budget, RngStream& rng, const Monitor& monitor) {
  if (!(cfg.gamma > 0.0 && cfg.gamma < 1.0)) throw InvalidParam("slgh: gamma must lie in (0,1)");
  if (!(cfg.eta1 > 0.0)) throw InvalidParam("slgh: eta1 must be positive");
  if (!(cfg.t0 > 0.0 && cfg.t0 <= 1.0)) throw InvalidParam("slgh: t0 must lie in (0,1]");
  if (cfg.variant == SlghConfig::Variant::derivative && !(cfg.eta2 > 0.0))
    throw InvalidParam("slgh: eta2 must be positive for the derivative variant");

  GradOracle oracle;
  oracle.kind = GradOracle::Kind::gh_zeroth;
  oracle.samples = cfg.grad_samples;
  const std::int64_t x_cost = grad_cost(H, oracle);
  const std::int64_t t_cost =
      cfg.variant == SlghConfig::Variant::derivative ? (H.has_grad_t() ? 1 : 2) : 0;
  const std::int64_t iter_cost = x_cost + t_cost;

  OptimizerResult res;
  const std::int64_t start_used = budget.used();
  std::vector<double> x(x0.begin(), x0.end());
  std::vector<double> g(x.size());
  double s = cfg.t0;  // internal smoothing share; reported level is 1 - s
  std::int64_t iter = 0;
  while (budget.remaining() >= iter_cost + 1) {
    const double t = 1.0 - s;
    query_grad(H, x, t, oracle, budget, rng, g);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= cfg.eta1 * g[i];
    ++iter;
    if (!all_finite(x)) {
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += cfg.eta1 * g[i];
      throw NonFiniteIterate(x);
    }
    if (cfg.variant == SlghConfig::Variant::ratio) {
      s *= cfg.gamma;
    } else {
      double dt;  // d GH / dt at the new iterate
      if (H.has_grad_t()) {
        budget.consume(1);
        dt = H.grad_t(x, t);
      } else {
        const double h = 1e-4;
        const double tp = std::min(t + h, 1.0);
        const double tm = std::max(t - h, 0.0);
        budget.consume(2);
        dt = (H.eval(x, tp) - H.eval(x, tm)) / (tp - tm);
      }
      // Alg. 2's level decays toward zero smoothing: step along d GH / ds
      // (= -dt), capped by the geometric rule and floored at 0.
      s = std::max(0.0, std::min(s + cfg.eta2 * dt, cfg.gamma * s));
    }
    if (monitor) res.trace.record(iter, budget.used(), 1.0 - s, monitor(x));
  }
  res.x_final = std::move(x);
  res.f_final = final_eval(H, res.x_final, budget);
  if (monitor) res.trace.record(iter + 1, budget.used(), 1.0, res.f_final);
  res.budget_used = budget.used() - start_used;
  return res;
}

}  // namespace contpath
