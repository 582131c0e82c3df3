#include "ridgelab/modulus_forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ridgelab {

AbstractModulus AbstractModulus::power(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("AbstractModulus: power exponent must lie in (0,1]");
  AbstractModulus m;
  m.alpha_ = alpha;
  return m;
}

AbstractModulus AbstractModulus::tabulated(std::vector<std::pair<double, double>> samples) {
  std::sort(samples.begin(), samples.end());
  if (samples.empty() || samples.front().first != 0.0 || samples.front().second != 0.0)
    throw std::invalid_argument("AbstractModulus: tabulated samples must start at (0,0)");
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (!(samples[i].second > samples[i - 1].second))
      throw std::invalid_argument("AbstractModulus: tabulated samples must strictly increase");
  AbstractModulus m;
  m.tabulated_ = std::move(samples);
  return m;
}

double AbstractModulus::operator()(double delta) const {
  if (delta <= 0.0) return 0.0;
  if (is_power()) return std::pow(delta, alpha_);
  if (delta >= tabulated_.back().first) return tabulated_.back().second;
  auto it = std::upper_bound(tabulated_.begin(), tabulated_.end(),
                             std::make_pair(delta, std::numeric_limits<double>::max()));
  auto hi = *it;
  auto lo = *(it - 1);
  double t = (delta - lo.first) / (hi.first - lo.first);
  return lo.second + t * (hi.second - lo.second);
}

bool AbstractModulus::subadditive_on(const std::vector<double>& deltas, double tol) const {
  for (double a : deltas)
    for (double b : deltas)
      if ((*this)(a + b) > (*this)(a) + (*this)(b) + tol) return false;
  return true;
}

bool AbstractModulus::divergence_condition(double delta0, int steps, double factor) const {
  double prev = (*this)(delta0) / delta0;
  for (int i = 1; i <= steps; ++i) {
    double delta = delta0 * std::pow(0.5, i);
    double ratio = (*this)(delta) / delta;
    if (!(ratio >= prev * factor)) return false;
    prev = ratio;
  }
  return true;
}

std::string AbstractModulus::describe() const {
  if (is_power()) return "power(alpha=" + std::to_string(alpha_) + ")";
  return "tabulated(" + std::to_string(tabulated_.size()) + " samples)";
}

double RateFunction::operator()(double x) const {
  double e = static_cast<double>(r_) / d_;
  if (form_ == Form::Power) return std::pow(x, -e);
  return std::pow(x * (1.0 + std::log2(x)), -e);
}

std::string RateFunction::describe() const {
  std::string base = form_ == Form::Power ? "power" : "log-power";
  return base + "(r=" + std::to_string(r_) + ",d=" + std::to_string(d_) + ")";
}

PhiConditionReport check_phi_conditions(const RateFunction& phi,
                                        const std::vector<double>& lambdas, long n_lo,
                                        long n_hi) {
  if (n_lo < 2 || n_hi < n_lo) throw std::invalid_argument("check_phi_conditions: bad range");
  PhiConditionReport report;
  const double e = static_cast<double>(phi.order()) / phi.dimension();

  // Log-spaced sweep keeps the scan cheap for wide ranges.
  std::vector<double> xs;
  for (double x = static_cast<double>(n_lo); x <= static_cast<double>(n_hi); x *= 1.01)
    xs.push_back(x);
  xs.push_back(static_cast<double>(n_hi));

  for (double lambda : lambdas) {
    if (!(lambda > 0.0 && lambda < 1.0))
      throw std::invalid_argument("check_phi_conditions: lambda must lie in (0,1)");
    PhiLambdaRow row{lambda, 0.0, std::pow(2.0 / lambda, e), true};
    const double x0 = 1.0 / (lambda * lambda);
    for (double x : xs) {
      if (lambda * x < 1.0) continue;
      double ratio = phi(lambda * x) / phi(x);
      row.c_lambda = std::max(row.c_lambda, ratio);
      if (phi.form() == RateFunction::Form::LogPower && x > x0 &&
          ratio > row.proof_bound * (1.0 + 1e-12))
        row.proof_bound_ok = false;
    }
    report.lambda_rows.push_back(row);
  }

  double prev = phi(static_cast<double>(n_lo));
  for (double x : xs) {
    double v = phi(x);
    if (v > prev * (1.0 + 1e-12)) report.decreasing = false;
    prev = v;
  }

  for (long n = n_lo; n <= n_hi; n = (n < 1024 ? n + 1 : n + n / 64)) {
    double ratio = phi(static_cast<double>(n / 2 > 0 ? n / 2 : 1)) / phi(static_cast<double>(n));
    report.d2 = std::max(report.d2, ratio);
  }
  return report;
}

}  // namespace ridgelab
