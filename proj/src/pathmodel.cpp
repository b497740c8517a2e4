// Copyright 2026 contpath contributors
// SPDX-License-Identifier: Apache-2.0
#include "contpath/pathmodel.hpp"

#include <algorithm>
#include <cmath>

#include "contpath/errors.hpp"

namespace contpath {

const char* to_string(Activation a) { return a == Activation::relu ? "relu" : "tanh"; }

Activation activation_from_string(const std::string& name) {
  if (name == "relu") return Activation::relu;
  if (name == "tanh") return Activation::tanh;
  throw InvalidParam("unknown activation: " + name);
}

std::size_t MlpPathModel::parameter_count() const {
  std::size_t n = 0;
  for (std::size_t l = 0; l < weights.size(); ++l) n += weights[l].size() + biases[l].size();
  return n;
}

MlpPathModel model_init(std::vector<int> layer_dims, Activation activation, std::uint64_t seed) {
  if (layer_dims.size() < 2) throw InvalidArchitecture("need at least input and output dims");
  if (layer_dims.front() != 1) throw InvalidArchitecture("path model input dim must be 1");
  for (int d : layer_dims)
    if (d < 1) throw InvalidArchitecture("layer dims must be positive");
  MlpPathModel m;
  m.layer_dims = std::move(layer_dims);
  m.activation = activation;
  RngStream rng(seed);
  for (std::size_t l = 0; l + 1 < m.layer_dims.size(); ++l) {
    const int fan_in = m.layer_dims[l];
    const int fan_out = m.layer_dims[l + 1];
    const double bound = std::sqrt(6.0 / fan_in);
    std::vector<double> w(static_cast<std::size_t>(fan_out) * fan_in);
    for (double& v : w) v = rng.uniform(-bound, bound);
    m.weights.push_back(std::move(w));
    m.biases.emplace_back(static_cast<std::size_t>(fan_out), 0.0);
  }
  return m;
}

namespace {

// Per-run scratch: post-activation outputs a[l] and pre-activations z[l].
struct Workspace {
  std::vector<std::vector<double>> a;  // a[0] = input, a[L] = output
  std::vector<std::vector<double>> z;
};

void forward_ws(const MlpPathModel& m, double t, Workspace& ws) {
  const std::size_t layers = m.layer_count();
  ws.a.resize(layers + 1);
  ws.z.resize(layers);
  ws.a[0].assign(1, t);
  for (std::size_t l = 0; l < layers; ++l) {
    const int in = m.layer_dims[l];
    const int out = m.layer_dims[l + 1];
    ws.z[l].assign(out, 0.0);
    const std::vector<double>& prev = ws.a[l];
    const double* w = m.weights[l].data();
    for (int r = 0; r < out; ++r) {
      double acc = m.biases[l][static_cast<std::size_t>(r)];
      const double* row = w + static_cast<std::size_t>(r) * in;
      for (int c = 0; c < in; ++c) acc += row[c] * prev[static_cast<std::size_t>(c)];
      ws.z[l][static_cast<std::size_t>(r)] = acc;
    }
    ws.a[l + 1].resize(out);
    if (l + 1 == layers) {
      ws.a[l + 1] = ws.z[l];
    } else if (m.activation == Activation::relu) {
      for (int r = 0; r < out; ++r) ws.a[l + 1][static_cast<std::size_t>(r)] = std::max(ws.z[l][static_cast<std::size_t>(r)], 0.0);
    } else {
      for (int r = 0; r < out; ++r) ws.a[l + 1][static_cast<std::size_t>(r)] = std::tanh(ws.z[l][static_cast<std::size_t>(r)]);
    }
  }
}

// Accumulates scale * d(upstream . x)/d(params) into flat (layer-major,
// weights then biases per layer).
void backward_ws(const MlpPathModel& m, const Workspace& ws, std::span<const double> upstream,
                 double scale, std::span<double> flat) {
  const std::size_t layers = m.layer_count();
  std::vector<double> delta(upstream.begin(), upstream.end());
  // flat offsets per layer
  std::vector<std::size_t> off(layers + 1, 0);
  for (std::size_t l = 0; l < layers; ++l) off[l + 1] = off[l] + m.weights[l].size() + m.biases[l].size();
  for (std::size_t l = layers; l-- > 0;) {
    const int in = m.layer_dims[l];
    const int out = m.layer_dims[l + 1];
    double* gw = flat.data() + off[l];
    double* gb = gw + static_cast<std::size_t>(out) * in;
    const std::vector<double>& prev = ws.a[l];
    for (int r = 0; r < out; ++r) {
      const double d = delta[static_cast<std::size_t>(r)] * scale;
      double* grow = gw + static_cast<std::size_t>(r) * in;
      for (int c = 0; c < in; ++c) grow[c] += d * prev[static_cast<std::size_t>(c)];
      gb[r] += d;
    }
    if (l == 0) break;
    std::vector<double> nd(static_cast<std::size_t>(in), 0.0);
    const double* w = m.weights[l].data();
    for (int r = 0; r < out; ++r) {
      const double d = delta[static_cast<std::size_t>(r)];
      const double* row = w + static_cast<std::size_t>(r) * in;
      for (int c = 0; c < in; ++c) nd[static_cast<std::size_t>(c)] += row[c] * d;
    }
    // through the hidden activation of layer l-1's output
    if (m.activation == Activation::relu) {
      for (int c = 0; c < in; ++c)
        if (ws.z[l - 1][static_cast<std::size_t>(c)] <= 0.0) nd[static_cast<std::size_t>(c)] = 0.0;
    } else {
      for (int c = 0; c < in; ++c) {
        const double th = std::tanh(ws.z[l - 1][static_cast<std::size_t>(c)]);
        nd[static_cast<std::size_t>(c)] *= 1.0 - th * th;
      }
    }
    delta = std::move(nd);
  }
}

void apply_flat(MlpPathModel& m, const std::function<void(double&, std::size_t)>& fn) {
  std::size_t idx = 0;
  for (std::size_t l = 0; l < m.layer_count(); ++l) {
    for (double& v : m.weights[l]) fn(v, idx++);
    for (double& v : m.biases[l]) fn(v, idx++);
  }
}

bool params_finite(const MlpPathModel& m) {
  for (std::size_t l = 0; l < m.layer_count(); ++l) {
    for (double v : m.weights[l])
      if (!std::isfinite(v)) return false;
    for (double v : m.biases[l])
      if (!std::isfinite(v)) return false;
  }
  return true;
}

// Upstream gradient of H at the model output; returns queries charged.
std::int64_t upstream_grad(const HomotopyProblem& H, std::span<const double> x, double t,
                           const GradOracle& oracle, RngStream& rng, std::vector<double>& out) {
  if (H.has_grad_x() && oracle.kind == GradOracle::Kind::analytic) {
    out.resize(x.size());
    H.grad_x(x, t, out);
    return 1;
  }
  GradEstimate est;
  if (oracle.kind == GradOracle::Kind::es) {
    est = es_grad(H, x, t, oracle.sigma, oracle.samples, rng);
  } else if (oracle.kind == GradOracle::Kind::gh_zeroth) {
    if (!H.beta) throw InvalidParam("gh_zeroth oracle needs the problem's beta");
    est = gh_zeroth_grad(H.original, x, t, *H.beta, oracle.samples, rng);
  } else {
    if (!H.has_grad_x()) throw InvalidParam("analytic oracle requested but the problem has no gradient");
    out.resize(x.size());
    H.grad_x(x, t, out);
    return 1;
  }
  out = std::move(est.grad);
  return est.evals_used;
}

}  // namespace

std::vector<double> model_forward(const MlpPathModel& m, double t) {
  Workspace ws;
  forward_ws(m, t, ws);
  return ws.a.back();
}

std::vector<double> model_backward(const MlpPathModel& m, double t, std::span<const double> upstream) {
  if (upstream.size() != static_cast<std::size_t>(m.output_dim()))
    throw InvalidParam("model_backward: upstream dimension mismatch");
  Workspace ws;
  forward_ws(m, t, ws);
  std::vector<double> flat(m.parameter_count(), 0.0);
  backward_ws(m, ws, upstream, 1.0, flat);
  return flat;
}

double lipschitz_bound(const MlpPathModel& m) {
  double bound = 1.0;
  for (const auto& w : m.weights) {
    double fro = 0.0;
    for (double v : w) fro += v * v;
    bound *= std::sqrt(fro);
  }
  return bound;
}

CplTrainResult cpl_train(MlpPathModel m, const HomotopyProblem& H, const CplTrainConfig& cfg,
                         Budget& budget, RngStream& rng, const Monitor& monitor) {
  if (m.output_dim() != H.dim) throw InvalidParam("cpl_train: model output dim must match problem dim");
  if (cfg.samples_per_iter < 1) throw InvalidParam("cpl_train: samples_per_iter must be positive");
  if (!(cfg.learning_rate > 0.0)) throw InvalidParam("cpl_train: learning rate must be positive");

  CplTrainResult res;
  const std::int64_t start_used = budget.used();
  const std::int64_t per_sample = (H.has_grad_x() && cfg.oracle.kind == GradOracle::Kind::analytic)
                                      ? 1
                                      : static_cast<std::int64_t>(cfg.oracle.samples) + 1;
  const std::int64_t iter_cost = per_sample * cfg.samples_per_iter;
  const std::int64_t affordable = iter_cost > 0 ? budget.remaining() / iter_cost : 0;
  const std::int64_t planned = std::min<std::int64_t>(cfg.iterations, affordable);

  const std::size_t pcount = m.parameter_count();
  std::vector<double> grad(pcount), up;
  std::vector<double> adam_m, adam_v;
  if (cfg.optimizer == CplTrainConfig::Optimizer::adam) {
    adam_m.assign(pcount, 0.0);
    adam_v.assign(pcount, 0.0);
  }
  Workspace ws;

  for (std::int64_t it = 1; it <= cfg.iterations; ++it) {
    if (!budget.try_consume(iter_cost)) break;  // exhausted: return the model as trained so far
    std::fill(grad.begin(), grad.end(), 0.0);
    const double inv_m = 1.0 / cfg.samples_per_iter;
    for (int s = 0; s < cfg.samples_per_iter; ++s) {
      const double t = rng.uniform();
      forward_ws(m, t, ws);
      upstream_grad(H, ws.a.back(), t, cfg.oracle, rng, up);
      backward_ws(m, ws, up, inv_m, grad);
    }
    double lr = cfg.learning_rate;
    if (cfg.lr_decay && planned > 0)
      lr *= 1.0 - static_cast<double>(it) / static_cast<double>(planned + 1);
    if (cfg.optimizer == CplTrainConfig::Optimizer::sgd) {
      apply_flat(m, [&](double& v, std::size_t i) { v -= lr * grad[i]; });
    } else {
      const double b1 = cfg.adam_beta1, b2 = cfg.adam_beta2;
      const double c1 = 1.0 - std::pow(b1, static_cast<double>(it));
      const double c2 = 1.0 - std::pow(b2, static_cast<double>(it));
      apply_flat(m, [&](double& v, std::size_t i) {
        adam_m[i] = b1 * adam_m[i] + (1.0 - b1) * grad[i];
        adam_v[i] = b2 * adam_v[i] + (1.0 - b2) * grad[i] * grad[i];
        v -= lr * (adam_m[i] / c1) / (std::sqrt(adam_v[i] / c2) + cfg.adam_eps);
      });
    }
    if (!params_finite(m)) throw NonFiniteLoss("path model parameters left the finite domain");
    if (monitor) {
      forward_ws(m, 1.0, ws);
      res.trace.record(it, budget.used(), 1.0, monitor(ws.a.back()));
    }
  }
  res.model = std::move(m);
  res.budget_used = budget.used() - start_used;
  return res;
}

std::vector<double> local_search(const MlpPathModel& m, const HomotopyProblem& H, double t_prime,
                                 double eta, Budget& budget, RngStream& rng, const GradOracle& oracle,
                                 int check_every) {
  if (!(t_prime >= 0.0 && t_prime <= 1.0)) throw InvalidParam("local_search: t_prime must lie in [0,1]");
  if (!(eta > 0.0)) throw InvalidParam("local_search: eta must be positive");
  if (check_every < 1) throw InvalidParam("local_search: check_every must be positive");
  std::vector<double> x = model_forward(m, t_prime);
  const std::int64_t gcost = (H.has_grad_x() && oracle.kind == GradOracle::Kind::analytic)
                                 ? 1
                                 : static_cast<std::int64_t>(oracle.samples) + 1;
  if (budget.remaining() < gcost + 2) return x;  // not enough for a step plus both value checks
  budget.consume(1);
  std::vector<double> best = x;
  double best_v = H.eval(x, t_prime);
  std::vector<double> g;
  std::int64_t steps = 0;
  while (budget.remaining() >= gcost + 1) {
    upstream_grad(H, x, t_prime, oracle, rng, g);
    budget.consume(gcost);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= eta * g[i];
    ++steps;
    bool finite = true;
    for (double v : x)
      if (!std::isfinite(v)) finite = false;
    if (!finite) throw NonFiniteIterate(best);
    if (steps % check_every == 0 || budget.remaining() < gcost + 1) {
      budget.consume(1);
      const double v = H.eval(x, t_prime);
      if (v < best_v) {
        best_v = v;
        best = x;
      }
    }
  }
  return best;
}

PathCurve path_sweep(const MlpPathModel& m, const HomotopyProblem& H, int grid_size) {
  if (grid_size < 2) throw InvalidParam("path_sweep: grid needs at least two points");
  PathCurve c;
  c.grid.reserve(static_cast<std::size_t>(grid_size));
  for (int i = 0; i < grid_size; ++i) {
    const double t = i + 1 == grid_size ? 1.0 : static_cast<double>(i) / (grid_size - 1);
    c.grid.push_back(t);
    c.x_values.push_back(model_forward(m, t));
    c.h_values.push_back(H.eval(c.x_values.back(), t));
    c.f_values.push_back(H.eval(c.x_values.back(), 1.0));
  }
  return c;
}

}  // namespace contpath
