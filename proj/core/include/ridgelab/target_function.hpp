#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ridgelab/point.hpp"

namespace ridgelab {

struct SmoothnessTag {
  std::optional<double> lipschitz_exponent;
  std::optional<int> differentiability_order;
};

/// An evaluable real-valued function on (the closure of) a domain, with
/// optional analytic partial derivatives indexed by multi-index.
class TargetFunction {
 public:
  using Eval = std::function<double(const Point&)>;
  using DerivEval = std::function<double(const std::vector<int>&, const Point&)>;

  TargetFunction() = default;
  TargetFunction(std::string label, int dimension, Eval f)
      : label_(std::move(label)), d_(dimension), f_(std::move(f)) {
    if (d_ < 1) throw std::invalid_argument("TargetFunction: dimension must be >= 1");
  }

  TargetFunction& with_derivatives(DerivEval df) {
    df_ = std::move(df);
    return *this;
  }
  TargetFunction& with_smoothness(SmoothnessTag tag) {
    tag_ = tag;
    return *this;
  }

  double operator()(const Point& x) const { return f_(x); }
  bool has_derivatives() const { return static_cast<bool>(df_); }
  double derivative(const std::vector<int>& alpha, const Point& x) const {
    if (!df_) throw std::logic_error("TargetFunction: missing-derivatives for " + label_);
    return df_(alpha, x);
  }

  /// Analytic derivative if declared, otherwise central finite differences
  /// (step 1e-4, one Richardson extrapolation).
  double derivative_or_fd(const std::vector<int>& alpha, const Point& x) const;

  int dimension() const { return d_; }
  const std::string& label() const { return label_; }
  const SmoothnessTag& smoothness() const { return tag_; }

  TargetFunction scaled_by(double c) const;
  TargetFunction plus(const TargetFunction& other) const;

 private:
  std::string label_;
  int d_ = 1;
  Eval f_;
  DerivEval df_;
  SmoothnessTag tag_;
};

}  // namespace ridgelab
