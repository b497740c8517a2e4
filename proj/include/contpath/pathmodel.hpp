// Copyright 2026 contpath contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef CONTPATH_PATHMODEL_HPP
#define CONTPATH_PATHMODEL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "contpath/budget.hpp"
#include "contpath/homotopy.hpp"
#include "contpath/optimizers.hpp"
#include "contpath/rng.hpp"
#include "contpath/trace.hpp"

namespace contpath {

enum class Activation { relu, tanh };

const char* to_string(Activation a);
Activation activation_from_string(const std::string& name);

// Fully connected continuation-path model x(t): scalar homotopy level in,
// decision vector out. Hidden layers use the configured activation, the
// output layer is linear. Weights are row-major per layer.
struct MlpPathModel {
  std::vector<int> layer_dims;  // [1, h_1, ..., h_L, out_dim]
  Activation activation = Activation::relu;
  std::vector<std::vector<double>> weights;  // layer l: layer_dims[l+1] x layer_dims[l]
  std::vector<std::vector<double>> biases;   // layer l: layer_dims[l+1]

  int output_dim() const { return layer_dims.back(); }
  std::size_t layer_count() const { return weights.size(); }
  std::size_t parameter_count() const;
};

// He-uniform weights (U[-sqrt(6/fan_in), +sqrt(6/fan_in)]), zero biases,
// reproducible from the seed.
MlpPathModel model_init(std::vector<int> layer_dims, Activation activation, std::uint64_t seed);

std::vector<double> model_forward(const MlpPathModel& m, double t);

// Reverse-mode gradient of upstream . x(t) over all parameters, flattened
// layer by layer (weights row-major, then biases).
std::vector<double> model_backward(const MlpPathModel& m, double t, std::span<const double> upstream);

// Upper bound on the Lipschitz constant of t -> x(t): product of layer
// Frobenius norms (hidden activations are 1-Lipschitz).
double lipschitz_bound(const MlpPathModel& m);

struct CplTrainConfig {
  std::int64_t iterations = 1000;  // I
  int samples_per_iter = 2;        // M levels drawn per step, uniform on [0,1]
  double learning_rate = 1e-3;
  GradOracle oracle;  // how the upstream gradient of H is obtained
  enum class Optimizer { sgd, adam };
  Optimizer optimizer = Optimizer::sgd;
  // Linear learning-rate decay to zero over the planned iteration count.
  bool lr_decay = false;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
};

struct CplTrainResult {
  MlpPathModel model;
  RunTrace trace;
  std::int64_t budget_used = 0;
};

// Stochastic training of the path model: each iteration samples M levels,
// pulls the upstream gradient of H at the model output through
// backpropagation, and takes one (averaged) optimizer step. Stops when the
// iteration count is reached or the budget cannot afford another step; the
// model trained so far is returned either way.
CplTrainResult cpl_train(MlpPathModel m, const HomotopyProblem& H, const CplTrainConfig& cfg,
                         Budget& budget, RngStream& rng, const Monitor& monitor = nullptr);

// Gradient descent on H(., t_prime) starting at the model output, returning
// the best point among the value checkpoints (never worse than the start on
// H(., t_prime)). Values are checked every `check_every` steps and at the
// end to spend the budget on movement rather than bookkeeping. With a budget
// below one step + two checks the start point is returned untouched.
std::vector<double> local_search(const MlpPathModel& m, const HomotopyProblem& H, double t_prime,
                                 double eta, Budget& budget, RngStream& rng,
                                 const GradOracle& oracle = {}, int check_every = 25);

// Frozen-model sweep over a uniform level grid.
struct PathCurve {
  std::vector<double> grid;
  std::vector<std::vector<double>> x_values;
  std::vector<double> h_values;  // H(x(t), t)
  std::vector<double> f_values;  // H(x(t), 1)
};

PathCurve path_sweep(const MlpPathModel& m, const HomotopyProblem& H, int grid_size);

}  // namespace contpath

#endif  // CONTPATH_PATHMODEL_HPP
