#include "ridgelab/rate_fit.hpp"

#include <cmath>
#include <stdexcept>

namespace ridgelab {

RateFit rate_fit(const std::vector<std::pair<double, double>>& pairs) {
  RateFit fit;
  for (const auto& [n, err] : pairs)
    if (n > 0.0 && err > 0.0) fit.pairs.emplace_back(n, err);
  if (fit.pairs.size() < 3) throw std::invalid_argument("rate_fit: insufficient-data");

  const double N = static_cast<double>(fit.pairs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, err] : fit.pairs) {
    double x = std::log(n), y = std::log(err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = N * sxx - sx * sx;
  const double slope = denom != 0.0 ? (N * sxy - sx * sy) / denom : 0.0;
  const double intercept = (sy - slope * sx) / N;
  fit.exponent = -slope;
  fit.constant = std::exp(intercept);

  double ss = 0.0;
  for (const auto& [n, err] : fit.pairs) {
    double r = std::log(err) - (intercept + slope * std::log(n));
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / N);
  return fit;
}

}  // namespace ridgelab
