#pragma once

#include <vector>

#include "ridgelab/point.hpp"

namespace ridgelab {

using MultiIndex = std::vector<int>;

int multi_index_order(const MultiIndex& alpha);

/// All multi-indices with |alpha| <= k in d variables, graded lexicographic.
std::vector<MultiIndex> multi_indices_up_to(int d, int k);

long long dim_homogeneous(int d, int k);   // C(d+k-1, k)
long long dim_poly_space(int d, int k);    // C(d+k, k)

/// floor(n^{1/d}) - 1 with integer-safe root extraction.
long long max_poly_degree(long long n, int d);

/// Dense multivariate polynomial of degree <= k, coefficients aligned with
/// multi_indices_up_to(d, k).
class Polynomial {
 public:
  Polynomial(int d, int k);
  Polynomial(int d, int k, std::vector<double> coefficients);

  int dimension() const { return d_; }
  int degree_bound() const { return k_; }
  const std::vector<MultiIndex>& basis() const { return basis_; }
  const std::vector<double>& coefficients() const { return coef_; }
  double& coefficient(const MultiIndex& alpha);
  double coefficient(const MultiIndex& alpha) const;

  double eval(const Point& x) const;
  Polynomial partial_derivative(int axis) const;
  Polynomial derivative(const MultiIndex& alpha) const;
  double coefficient_norm() const;

 private:
  int d_;
  int k_;
  std::vector<MultiIndex> basis_;
  std::vector<double> coef_;
};

}  // namespace ridgelab
