#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ridgelab {

/// Abstract modulus of smoothness: continuous, increasing, subadditive gauge
/// with omega(0) = 0. Either a power delta^alpha (0 < alpha <= 1) or a
/// tabulated monotone sample set with linear interpolation.
class AbstractModulus {
 public:
  static AbstractModulus power(double alpha);
  static AbstractModulus tabulated(std::vector<std::pair<double, double>> samples);

  double operator()(double delta) const;
  bool is_power() const { return tabulated_.empty(); }
  double exponent() const { return alpha_; }

  /// omega(d1 + d2) <= omega(d1) + omega(d2) over sampled pairs.
  bool subadditive_on(const std::vector<double>& deltas, double tol = 1e-12) const;

  /// lim_{delta->0+} omega(delta)/delta = infinity, checked on a geometric
  /// ladder: the ratio must grow by at least `factor` per halving.
  bool divergence_condition(double delta0 = 0.25, int steps = 20, double factor = 1.01) const;

  std::string describe() const;

 private:
  AbstractModulus() = default;
  double alpha_ = 1.0;
  std::vector<std::pair<double, double>> tabulated_;
};

/// Strictly decreasing rate gauge phi with phi(x) -> 0; power n^{-r/d} or
/// the log-corrected 1/(x (1 + log2 x))^{r/d}.
class RateFunction {
 public:
  enum class Form { Power, LogPower };

  static RateFunction power(int r, int d) { return RateFunction(Form::Power, r, d); }
  static RateFunction log_power(int r, int d) { return RateFunction(Form::LogPower, r, d); }

  double operator()(double x) const;
  Form form() const { return form_; }
  int order() const { return r_; }
  int dimension() const { return d_; }
  std::string describe() const;

 private:
  RateFunction(Form form, int r, int d) : form_(form), r_(r), d_(d) {
    if (r < 1 || d < 1) throw std::invalid_argument("RateFunction: need r >= 1, d >= 1");
  }
  Form form_;
  int r_;
  int d_;
};

struct PhiLambdaRow {
  double lambda;
  double c_lambda;        // smallest observed phi(lambda x)/phi(x) bound over the range
  double proof_bound;     // (2/lambda)^{r/d}, checked for x > lambda^{-2} (log-power form)
  bool proof_bound_ok;    // true when the measured ratio stays below proof_bound
};

struct PhiConditionReport {
  std::vector<PhiLambdaRow> lambda_rows;
  double d2 = 0.0;  // smallest working constant in phi(floor(n/2)) <= D2 phi(n)
  bool decreasing = true;
};

/// Numerical verification of the scaling condition phi(lambda x) <= C_lambda phi(x)
/// and the halving condition phi(floor(n/2)) <= D2 phi(n) over [n_lo, n_hi].
PhiConditionReport check_phi_conditions(const RateFunction& phi,
                                        const std::vector<double>& lambdas, long n_lo,
                                        long n_hi);

}  // namespace ridgelab
