#include "ridgelab/network.hpp"

#include <stdexcept>

namespace ridgelab {

NetworkParams NetworkParams::zero(int n, int d, const Activation& sigma) {
  NetworkParams p;
  p.activation = sigma;
  p.neurons.assign(n, Neuron{0.0, Point(d, 0.0), 0.0});
  return p;
}

double net_eval(const NetworkParams& params, const Point& x) {
  double s = 0.0;
  for (const Neuron& nrn : params.neurons) {
    if (nrn.weight.size() != x.size())
      throw std::invalid_argument("net_eval: dimension-mismatch");
    s += nrn.outer * params.activation.eval(0, dot(nrn.weight, x) + nrn.bias);
  }
  return s;
}

double net_partial(const NetworkParams& params, const MultiIndex& alpha, const Point& x) {
  const int order = multi_index_order(alpha);
  double s = 0.0;
  for (const Neuron& nrn : params.neurons) {
    double w_pow = 1.0;
    for (std::size_t j = 0; j < alpha.size(); ++j)
      for (int p = 0; p < alpha[j]; ++p) w_pow *= nrn.weight[j];
    if (nrn.outer == 0.0 || w_pow == 0.0) continue;
    s += nrn.outer * w_pow * params.activation.eval(order, dot(nrn.weight, x) + nrn.bias);
  }
  return s;
}

std::vector<double> net_param_gradient(const NetworkParams& params, const Point& x) {
  const int d = static_cast<int>(x.size());
  std::vector<double> grad(params.neurons.size() * (2 + d));
  for (std::size_t k = 0; k < params.neurons.size(); ++k) {
    const Neuron& nrn = params.neurons[k];
    double z = dot(nrn.weight, x) + nrn.bias;
    double s0 = params.activation.eval(0, z);
    double s1 = params.activation.solver_gradient(z);
    double* g = grad.data() + k * (2 + d);
    g[0] = s0;                // d/da
    g[1] = nrn.outer * s1;    // d/dc
    for (int j = 0; j < d; ++j) g[2 + j] = nrn.outer * s1 * x[j];
  }
  return grad;
}

TargetFunction net_as_target(const NetworkParams& params, const std::string& label) {
  TargetFunction t(label, params.dimension() > 0 ? params.dimension() : 1,
                   [params](const Point& x) { return net_eval(params, x); });
  if (params.activation.infinitely_smooth())
    t.with_derivatives([params](const MultiIndex& a, const Point& x) {
      return net_partial(params, a, x);
    });
  return t;
}

}  // namespace ridgelab
