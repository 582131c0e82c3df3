#pragma once

#include <vector>

#include "ridgelab/activation.hpp"
#include "ridgelab/point.hpp"
#include "ridgelab/polynomial.hpp"
#include "ridgelab/target_function.hpp"

namespace ridgelab {

struct Neuron {
  double outer = 0.0;  // a_k
  Point weight;        // w_k
  double bias = 0.0;   // c_k
};

/// A single-hidden-layer network sum_k a_k sigma(w_k . x + c_k).
struct NetworkParams {
  std::vector<Neuron> neurons;
  Activation activation = Activation::logistic();

  int dimension() const { return neurons.empty() ? 0 : static_cast<int>(neurons[0].weight.size()); }
  int width() const { return static_cast<int>(neurons.size()); }

  static NetworkParams zero(int n, int d, const Activation& sigma);
};

double net_eval(const NetworkParams& params, const Point& x);

/// Analytic partial derivative of the network w.r.t. x for a multi-index,
/// via sigma^(|alpha|) and the chain rule.
double net_partial(const NetworkParams& params, const MultiIndex& alpha, const Point& x);

/// Gradient w.r.t. all parameters, laid out per neuron as (a, c, w_0..w_{d-1}).
std::vector<double> net_param_gradient(const NetworkParams& params, const Point& x);

TargetFunction net_as_target(const NetworkParams& params, const std::string& label = "network");

}  // namespace ridgelab
