// Copyright 2026 contpath contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef CONTPATH_GRADEST_HPP
#define CONTPATH_GRADEST_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "contpath/homotopy.hpp"
#include "contpath/rng.hpp"

namespace contpath {

// Gradient estimate plus the exact number of objective queries it made.
struct GradEstimate {
  std::vector<double> grad;
  std::int64_t evals_used = 0;
};

// Central finite differences per coordinate; 2*dim queries. Validation
// oracle, not an optimizer workhorse.
GradEstimate finite_diff_grad(const Objective& f, std::span<const double> x, double h);

// One-point evolution-strategies estimate
//   (1 / (sigma K)) sum_k (H(x + sigma u_k, t) - H(x, t)) u_k,  u_k ~ N(0, I).
// K+1 queries of H. Plain one-sided differences, no antithetic pairing.
GradEstimate es_grad(const HomotopyProblem& H, std::span<const double> x, double t, double sigma, int k,
                     RngStream& rng);

// Zeroth-order gradient of the Gaussian homotopy: same shape as es_grad but
// queries only the original objective f, with effective smoothing
// sigma = max(beta (1 - t), 1e-3). The floor removes the t -> 1 singularity;
// at t = 1 this is exactly es_grad on f with sigma = 1e-3.
GradEstimate gh_zeroth_grad(const Objective& f, std::span<const double> x, double t, double beta, int k,
                            RngStream& rng);

// Smallest effective smoothing used by gh_zeroth_grad.
inline constexpr double kSigmaFloor = 1e-3;

}  // namespace contpath

#endif  // CONTPATH_GRADEST_HPP
