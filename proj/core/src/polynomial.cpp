#include "ridgelab/polynomial.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ridgelab/smoothness.hpp"

namespace ridgelab {

int multi_index_order(const MultiIndex& alpha) {
  return std::accumulate(alpha.begin(), alpha.end(), 0);
}

std::vector<MultiIndex> multi_indices_up_to(int d, int k) {
  std::vector<MultiIndex> out;
  for (int l = 0; l <= k; ++l)
    for (auto& a : multi_indices_of_order(d, l)) out.push_back(a);
  return out;
}

long long dim_homogeneous(int d, int k) {
  if (d < 1 || k < 0) throw std::invalid_argument("dim_homogeneous: need d >= 1, k >= 0");
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (d - 1 + i) / i;
  return b;
}

long long dim_poly_space(int d, int k) {
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (d + i) / i;
  return b;
}

long long max_poly_degree(long long n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("max_poly_degree: need n >= 1, d >= 1");
  auto pow_ll = [](long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
      if (base != 0 && r > (1LL << 62) / base) return (1LL << 62);
      r *= base;
    }
    return r;
  };
  long long root = static_cast<long long>(std::floor(std::pow(static_cast<double>(n), 1.0 / d)));
  while (pow_ll(root + 1, d) <= n) ++root;
  while (root > 0 && pow_ll(root, d) > n) --root;
  return root - 1;
}

Polynomial::Polynomial(int d, int k) : Polynomial(d, k, {}) {}

Polynomial::Polynomial(int d, int k, std::vector<double> coefficients)
    : d_(d), k_(k), basis_(multi_indices_up_to(d, k)) {
  if (coefficients.empty())
    coef_.assign(basis_.size(), 0.0);
  else if (coefficients.size() == basis_.size())
    coef_ = std::move(coefficients);
  else
    throw std::invalid_argument("Polynomial: coefficient count mismatch");
}

double& Polynomial::coefficient(const MultiIndex& alpha) {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == alpha) return coef_[i];
  throw std::invalid_argument("Polynomial: multi-index exceeds degree bound");
}

double Polynomial::coefficient(const MultiIndex& alpha) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == alpha) return coef_[i];
  return 0.0;
}

double Polynomial::eval(const Point& x) const {
  double s = 0.0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (coef_[i] == 0.0) continue;
    double m = coef_[i];
    for (int j = 0; j < d_; ++j)
      for (int p = 0; p < basis_[i][j]; ++p) m *= x[j];
    s += m;
  }
  return s;
}

Polynomial Polynomial::partial_derivative(int axis) const {
  Polynomial out(d_, std::max(k_ - 1, 0));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (coef_[i] == 0.0 || basis_[i][axis] == 0) continue;
    MultiIndex a = basis_[i];
    double c = coef_[i] * a[axis];
    a[axis] -= 1;
    out.coefficient(a) += c;
  }
  return out;
}

Polynomial Polynomial::derivative(const MultiIndex& alpha) const {
  Polynomial out = *this;
  for (int axis = 0; axis < d_; ++axis)
    for (int i = 0; i < alpha[axis]; ++i) out = out.partial_derivative(axis);
  return out;
}

double Polynomial::coefficient_norm() const {
  double s = 0.0;
  for (double c : coef_) s += std::abs(c);
  return s;
}

}  // namespace ridgelab
