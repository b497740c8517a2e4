// Copyright 2026 contpath contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef CONTPATH_OPTIMIZERS_HPP
#define CONTPATH_OPTIMIZERS_HPP

#include <functional>
#include <span>
#include <vector>

#include "contpath/budget.hpp"
#include "contpath/gradest.hpp"
#include "contpath/homotopy.hpp"
#include "contpath/trace.hpp"

namespace contpath {

// How an optimizer obtains the x-gradient of H when no analytic gradient is
// attached to the problem.
struct GradOracle {
  enum class Kind { analytic, es, gh_zeroth };
  Kind kind = Kind::analytic;
  double sigma = 0.1;  // es perturbation scale
  int samples = 1;     // K
};

struct GdConfig {
  double eta = 1e-2;
  GradOracle oracle;
  double grad_tol = 1e-10;  // stop when the gradient norm drops below this
};

// Reporting-only callback evaluating the original objective; never counted
// against the budget and never fed back into the optimization.
using Monitor = std::function<double(std::span<const double>)>;

struct OptimizerResult {
  std::vector<double> x_final;
  double f_final = 0.0;  // H(x_final, 1), recomputed at return (counted)
  RunTrace trace;
  std::int64_t budget_used = 0;
};

// Plain gradient descent on H(., t_fixed) until the budget runs out or the
// gradient norm crosses grad_tol. One budget unit is reserved for the final
// re-evaluation of H(x, 1).
OptimizerResult gradient_descent(const HomotopyProblem& H, std::span<const double> x0, double t_fixed,
                                 const GdConfig& cfg, Budget& budget, RngStream& rng,
                                 const Monitor& monitor = nullptr);

struct ClassicalConfig {
  GdConfig inner;
  // Per-level inner step size: constant keeps inner.eta everywhere;
  // smoothing_sq scales it by max(sigma_level^2, floor) / beta^2, which is
  // the decaying step policy graduated-optimization schedules use.
  enum class StepScale { constant, smoothing_sq };
  StepScale step_scale = StepScale::constant;
  double step_scale_floor = 0.01;
  // Optional share of the budget given to the first level (Alg. 1 solves it
  // from scratch, the rest are warm-started). 0 = even split.
  double first_level_fraction = 0.0;
};

// Classical continuation: solve H(., t_0) from x0, then warm-start each
// subsequent level of the schedule from the previous solution.
OptimizerResult classical_homotopy(const HomotopyProblem& H, const Schedule& schedule,
                                   const ClassicalConfig& cfg, std::span<const double> x0, Budget& budget,
                                   RngStream& rng, const Monitor& monitor = nullptr);

struct SlghConfig {
  double gamma = 0.999;  // smoothing decay ratio, in (0,1)
  double eta1 = 1e-3;    // x step
  double eta2 = 1e-4;    // level step (derivative variant)
  double t0 = 1.0;       // initial internal level = initial smoothing share, in (0,1]
  enum class Variant { ratio, derivative };
  Variant variant = Variant::ratio;
  int grad_samples = 1;  // K for the zeroth-order gradient
};

// Single-loop Gaussian homotopy. Internally the algorithm's level is the
// smoothing share s (s <- gamma s in the ratio variant); the reported
// homotopy level is t = 1 - s so t = 1 always denotes the original
// objective. Uses the closed-form x-gradient when the problem has one, else
// the zeroth-order Gaussian-homotopy estimate on f.
OptimizerResult slgh(const HomotopyProblem& H, const SlghConfig& cfg, std::span<const double> x0,
                     Budget& budget, RngStream& rng, const Monitor& monitor = nullptr);

}  // namespace contpath

#endif  // CONTPATH_OPTIMIZERS_HPP
