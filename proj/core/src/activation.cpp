#include "ridgelab/activation.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace ridgelab {
namespace {

double logistic_value(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

// sigma' = sigma (1 - sigma), so sigma^(n) is a polynomial in t = sigma(x).
// Coefficients are built once per order and cached.
const std::vector<double>& logistic_derivative_poly(int order) {
  static std::vector<std::vector<double>> cache = {{0.0, 1.0}};  // order 0: t
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= order) {
    const std::vector<double>& p = cache.back();
    // q(t) = p'(t) * t * (1 - t)
    std::vector<double> dp(p.size() >= 1 ? p.size() - 1 : 0, 0.0);
    for (std::size_t i = 1; i < p.size(); ++i) dp[i - 1] = p[i] * static_cast<double>(i);
    std::vector<double> q(dp.size() + 2, 0.0);
    for (std::size_t i = 0; i < dp.size(); ++i) {
      q[i + 1] += dp[i];
      q[i + 2] -= dp[i];
    }
    cache.push_back(std::move(q));
  }
  return cache[order];
}

double poly_eval(const std::vector<double>& c, double t) {
  double v = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * t + c[i];
  return v;
}

// d^n/dx^n arctan(x) = (n-1)! cos^n(theta) sin(n (theta + pi/2)), theta = arctan x.
double arctan_derivative(int n, double x) {
  double theta = std::atan(x);
  double c = std::cos(theta);
  double f = 1.0;
  for (int i = 2; i < n; ++i) f *= i;
  return f * std::pow(c, n) * std::sin(n * (theta + M_PI / 2.0));
}

}  // namespace

Activation Activation::elu(double alpha) {
  if (alpha == 0.0) throw std::invalid_argument("elu: alpha must be nonzero");
  return Activation(ActivationKind::Elu, 0, alpha);
}

Activation Activation::relu_power(int k) {
  if (k < 1) throw std::invalid_argument("relu_power: k must be >= 1");
  return Activation(ActivationKind::ReluPower, k, 0.0);
}

bool Activation::supports_order(int order) const {
  if (order < 0) return false;
  switch (kind_) {
    case ActivationKind::Heaviside: return order == 0;
    case ActivationKind::ReluPower: return order < k_;
    default: return true;
  }
}

double Activation::eval(int order, double x) const {
  if (order < 0) throw UnsupportedDerivativeOrder("activation_eval: negative order");
  switch (kind_) {
    case ActivationKind::Logistic: {
      if (order == 0) return logistic_value(x);
      return poly_eval(logistic_derivative_poly(order), logistic_value(x));
    }
    case ActivationKind::ArctanSigmoid: {
      if (order == 0) return 0.5 + std::atan(x) / M_PI;
      return arctan_derivative(order, x) / M_PI;
    }
    case ActivationKind::Elu: {
      if (order == 0) return x >= 0.0 ? x : alpha_ * (std::exp(x) - 1.0);
      if (x >= 0.0) return order == 1 ? 1.0 : 0.0;  // right value at the kink
      return alpha_ * std::exp(x);
    }
    case ActivationKind::ReluPower: {
      if (order >= k_)
        throw UnsupportedDerivativeOrder("activation_eval: relu-power supports orders 0..k-1");
      if (x < 0.0) return 0.0;
      double f = 1.0;
      for (int i = 0; i < order; ++i) f *= static_cast<double>(k_ - i);
      return f * std::pow(x, k_ - order);
    }
    case ActivationKind::Heaviside: {
      if (order > 0)
        throw UnsupportedDerivativeOrder("activation_eval: heaviside is not differentiable");
      return x >= 0.0 ? 1.0 : 0.0;
    }
  }
  throw std::logic_error("activation_eval: unreachable");
}

double Activation::solver_gradient(double x) const {
  switch (kind_) {
    case ActivationKind::ReluPower:
      if (x < 0.0) return 0.0;
      return k_ == 1 ? 1.0 : static_cast<double>(k_) * std::pow(x, k_ - 1);
    case ActivationKind::Heaviside:
      return 0.0;
    default:
      return eval(1, x);
  }
}

std::string Activation::name() const {
  switch (kind_) {
    case ActivationKind::Logistic: return "logistic";
    case ActivationKind::ArctanSigmoid: return "arctan-sigmoid";
    case ActivationKind::Elu: return "elu(alpha=" + std::to_string(alpha_) + ")";
    case ActivationKind::ReluPower: return "relu-power(k=" + std::to_string(k_) + ")";
    case ActivationKind::Heaviside: return "heaviside";
  }
  return "?";
}

}  // namespace ridgelab
