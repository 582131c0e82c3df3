#include "ridgelab/poly_network.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "ridgelab/norm.hpp"
#include "ridgelab/smoothness.hpp"

namespace ridgelab {
namespace {

int effective_degree(const Polynomial& q) {
  int k = 0;
  const auto& basis = q.basis();
  const auto& coef = q.coefficients();
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coef[i] != 0.0) k = std::max(k, multi_index_order(basis[i]));
  return k;
}

double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

double find_anchor(const Activation& sigma, int max_order) {
  for (int sign : {+1, -1}) {
    for (int step = 1; step <= 20; ++step) {
      double c0 = sign * 0.1 * step;
      bool ok = true;
      for (int i = 0; i <= max_order && ok; ++i) {
        if (!sigma.supports_order(i)) {
          ok = false;
          break;
        }
        ok = std::abs(sigma.eval(i, c0)) >= 1e-6;
      }
      if (ok) return c0;
    }
  }
  throw std::runtime_error("poly_by_network: derivative-vanishes-at-anchor");
}

PolyNetworkResult poly_by_network(const Polynomial& q, const Activation& sigma,
                                  int neuron_budget, double epsilon_target,
                                  const Domain& domain, std::optional<double> anchor,
                                  unsigned seed) {
  const int d = q.dimension();
  const int k = effective_degree(q);
  RidgeDirections dirs = ridge_directions(d, k, seed);
  const int s = static_cast<int>(dirs.directions.size());
  if (static_cast<long long>(s) * (k + 1) > neuron_budget)
    throw std::invalid_argument("poly_by_network: budget below s(k+1) for this degree");

  const double c0 = anchor ? *anchor : find_anchor(sigma, k);
  for (int i = 0; i <= k; ++i)
    if (std::abs(sigma.eval(i, c0)) < 1e-12)
      throw std::runtime_error("poly_by_network: derivative-vanishes-at-anchor");

  Polynomial q_k(d, k);
  for (std::size_t i = 0; i < q_k.basis().size(); ++i)
    q_k.coefficient(q_k.basis()[i]) = q.coefficient(q_k.basis()[i]);
  RidgeForm form = poly_to_ridge(q_k, dirs.directions);

  SamplePlan plan = make_sample_plan(domain, NormQuery{kSupNorm, TensorGridSampling{129}});

  PolyNetworkResult best;
  best.achieved_error = std::numeric_limits<double>::infinity();
  best.anchor = c0;

  // Scaled nodes beta_l = l - k/2; the Vandermonde solve runs in the scaled
  // variable to keep it well conditioned for small h.
  Eigen::MatrixXd vand(k + 1, k + 1);
  for (int m = 0; m <= k; ++m)
    for (int l = 0; l <= k; ++l)
      vand(m, l) = std::pow(l - 0.5 * k, m);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(vand);

  for (double log_h = -1.0; log_h >= -6.0; log_h -= 0.5) {
    const double h = std::pow(10.0, log_h);
    NetworkParams net;
    net.activation = sigma;
    for (int j = 0; j < s; ++j) {
      Eigen::VectorXd rhs(k + 1);
      for (int m = 0; m <= k; ++m) {
        double cm = m < static_cast<int>(form.univariate[j].size()) ? form.univariate[j][m] : 0.0;
        rhs(m) = factorial(m) * cm / (sigma.eval(m, c0) * std::pow(h, m));
      }
      Eigen::VectorXd a = lu.solve(rhs);
      for (int l = 0; l <= k; ++l) {
        double b = (l - 0.5 * k) * h;
        net.neurons.push_back(Neuron{a(l), scaled(form.directions[j], b), c0});
      }
    }
    double err = norm_estimate(
        [&](const Point& x) { return q.eval(x) - net_eval(net, x); }, plan);
    if (err < best.achieved_error) {
      best.achieved_error = err;
      best.params = std::move(net);
      best.step_used = h;
    }
  }
  best.reached_target = best.achieved_error <= epsilon_target;
  return best;
}

std::vector<double> simultaneous_error(const Polynomial& q, const NetworkParams& params,
                                       int max_order, const Domain& domain, int resolution) {
  if (!params.activation.infinitely_smooth() &&
      params.activation.kind() != ActivationKind::Elu)
    throw UnsupportedDerivativeOrder("simultaneous_error: activation must be smooth");
  SamplePlan plan = make_sample_plan(domain, NormQuery{kSupNorm, TensorGridSampling{resolution}});
  std::vector<double> errors(max_order + 1, 0.0);
  for (int order = 0; order <= max_order; ++order) {
    for (const auto& alpha : multi_indices_of_order(q.dimension(), order)) {
      Polynomial dq = q.derivative(alpha);
      double e = norm_estimate(
          [&](const Point& x) { return dq.eval(x) - net_partial(params, alpha, x); }, plan);
      errors[order] = std::max(errors[order], e);
    }
  }
  return errors;
}

}  // namespace ridgelab
