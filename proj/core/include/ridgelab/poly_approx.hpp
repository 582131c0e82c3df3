#pragma once

#include <utility>

#include "ridgelab/domain.hpp"
#include "ridgelab/norm.hpp"
#include "ridgelab/polynomial.hpp"
#include "ridgelab/target_function.hpp"

namespace ridgelab {

struct PolyApproxResult {
  Polynomial poly;
  double error = 0.0;  // achieved sampled error
};

/// Best polynomial approximation of degree <= k on sampled points:
/// least squares for p = 2, a grid linear program (discrete Chebyshev)
/// for p = inf.
PolyApproxResult poly_best_approx(const TargetFunction& f, int k, const NormQuery& q,
                                  const Domain& domain);

}  // namespace ridgelab
