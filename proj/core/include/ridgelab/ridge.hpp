#pragma once

#include <vector>

#include "ridgelab/polynomial.hpp"

namespace ridgelab {

/// Sum of univariate polynomials of ridge arguments: sum_j p_j(w_j . x).
struct RidgeForm {
  std::vector<Point> directions;                 // unit vectors w_j
  std::vector<std::vector<double>> univariate;   // p_j as coefficient lists, degree <= k
  double eval(const Point& x) const;
};

struct RidgeDirections {
  std::vector<Point> directions;
  double condition_number = 0.0;  // of the coefficient-matching system
};

/// Directions spanning P_k as ridge sums: k+1 equiangular vectors for d = 2,
/// the trivial direction for d = 1, random unit vectors with a rank check for
/// d >= 3 (up to 50 redraws).
RidgeDirections ridge_directions(int d, int k, unsigned seed = 1);

/// Expands sum_j sum_i c_{j,i} (w_j . x)^i in the monomial basis and matches
/// the coefficients of q (minimum-norm least squares). Throws when the
/// direction set cannot represent degree-k polynomials.
RidgeForm poly_to_ridge(const Polynomial& q, const std::vector<Point>& directions);

}  // namespace ridgelab
