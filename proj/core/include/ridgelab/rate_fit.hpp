#pragma once

#include <utility>
#include <vector>

namespace ridgelab {

/// Log-log least-squares fit error ~ C n^(-beta).
struct RateFit {
  std::vector<std::pair<double, double>> pairs;  // the (n, error) points used
  double exponent = 0.0;                         // beta
  double constant = 0.0;                         // C
  double residual = 0.0;                         // rms residual in log space
};

/// Ordinary least squares on (log n, log error); pairs with non-positive
/// error are dropped first. Throws insufficient-data below 3 usable pairs.
RateFit rate_fit(const std::vector<std::pair<double, double>>& pairs);

}  // namespace ridgelab
