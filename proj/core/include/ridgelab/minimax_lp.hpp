#pragma once

#include <vector>

namespace ridgelab {

struct MinimaxFit {
  std::vector<double> coefficients;
  double error = 0.0;  // leveled max |values - basis * coefficients|
  int iterations = 0;
  bool converged = false;
};

/// Discrete linear Chebyshev approximation: minimize over u the value
/// max_i |values[i] - sum_j basis[i][j] u_j|, solved as a linear program
/// (revised simplex on the dual; the primal solution is recovered from the
/// simplex multipliers).
MinimaxFit chebyshev_fit(const std::vector<std::vector<double>>& basis,
                         const std::vector<double>& values, int max_iterations = 20000);

}  // namespace ridgelab
