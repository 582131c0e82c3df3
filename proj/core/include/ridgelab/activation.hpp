#pragma once

#include <stdexcept>
#include <string>

namespace ridgelab {

enum class ActivationKind { Logistic, ArctanSigmoid, Elu, ReluPower, Heaviside };

struct UnsupportedDerivativeOrder : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Scalar activation with pointwise derivative evaluation.
///
/// Supported derivative orders: any order for the smooth kinds
/// (logistic, arctan sigmoid, ELU with one-sided values at 0),
/// 0..k-1 for ReLU^k, and 0 for the Heaviside function.
class Activation {
 public:
  static Activation logistic() { return Activation(ActivationKind::Logistic, 0, 0.0); }
  static Activation arctan_sigmoid() { return Activation(ActivationKind::ArctanSigmoid, 0, 0.0); }
  static Activation elu(double alpha);
  static Activation relu_power(int k);
  static Activation heaviside() { return Activation(ActivationKind::Heaviside, 0, 0.0); }

  ActivationKind kind() const { return kind_; }
  int power() const { return k_; }
  double alpha() const { return alpha_; }

  bool supports_order(int order) const;
  bool infinitely_smooth() const {
    return kind_ == ActivationKind::Logistic || kind_ == ActivationKind::ArctanSigmoid;
  }

  /// sigma^(order)(x); one-sided (right) values at kinks.
  double eval(int order, double x) const;

  /// First derivative taken a.e. (right-continuous at kinks); for ReLU^k this
  /// intentionally extends past the eval() order limit so solvers can descend.
  double solver_gradient(double x) const;

  std::string name() const;

 private:
  Activation(ActivationKind kind, int k, double alpha) : kind_(kind), k_(k), alpha_(alpha) {}

  ActivationKind kind_;
  int k_;
  double alpha_;
};

}  // namespace ridgelab
