#include "ridgelab/ridge.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace ridgelab {
namespace {

// Coefficient of x^beta in (w . x)^i is the multinomial i!/beta! * w^beta
// for |beta| = i, zero otherwise.
double ridge_power_coefficient(const Point& w, const MultiIndex& beta, int i) {
  if (multi_index_order(beta) != i) return 0.0;
  double c = 1.0;
  int used = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) {
    for (int l = 1; l <= beta[j]; ++l) {
      ++used;
      c *= static_cast<double>(used) / l;
    }
    c *= std::pow(w[j], beta[j]);
  }
  return c;
}

Eigen::MatrixXd matching_matrix(const std::vector<Point>& dirs, int d, int k) {
  const auto basis = multi_indices_up_to(d, k);
  const int s = static_cast<int>(dirs.size());
  Eigen::MatrixXd M(basis.size(), static_cast<std::size_t>(s) * (k + 1));
  for (std::size_t row = 0; row < basis.size(); ++row)
    for (int j = 0; j < s; ++j)
      for (int i = 0; i <= k; ++i)
        M(row, j * (k + 1) + i) = ridge_power_coefficient(dirs[j], basis[row], i);
  return M;
}

}  // namespace

double RidgeForm::eval(const Point& x) const {
  double s = 0.0;
  for (std::size_t j = 0; j < directions.size(); ++j) {
    double t = dot(directions[j], x);
    double v = 0.0;
    for (std::size_t i = univariate[j].size(); i-- > 0;) v = v * t + univariate[j][i];
    s += v;
  }
  return s;
}

RidgeDirections ridge_directions(int d, int k, unsigned seed) {
  if (d < 1 || k < 0) throw std::invalid_argument("ridge_directions: need d >= 1, k >= 0");
  RidgeDirections out;
  if (d == 1) {
    out.directions = {Point{1.0}};
    out.condition_number = 1.0;
    return out;
  }
  if (d == 2) {
    for (int j = 0; j <= k; ++j) {
      double theta = j * M_PI / (k + 1);
      out.directions.push_back({std::cos(theta), std::sin(theta)});
    }
  } else {
    const long long s = dim_homogeneous(d, k);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    bool ok = false;
    for (int attempt = 0; attempt < 50 && !ok; ++attempt) {
      out.directions.clear();
      for (long long j = 0; j < s; ++j) {
        Point w(d);
        double len = 0.0;
        do {
          for (double& c : w) c = gauss(rng);
          len = euclidean_norm(w);
        } while (len < 1e-12);
        out.directions.push_back(scaled(w, 1.0 / len));
      }
      Eigen::MatrixXd M = matching_matrix(out.directions, d, k);
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
      double smin = svd.singularValues().tail(1)(0);
      double smax = svd.singularValues()(0);
      out.condition_number = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
      ok = svd.rank() >= static_cast<long>(dim_poly_space(d, k)) &&
           out.condition_number < 1e8;
    }
    if (!ok) throw std::runtime_error("ridge_directions: rank-deficient-after-max-retries");
    return out;
  }
  Eigen::MatrixXd M = matching_matrix(out.directions, d, k);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  double smin = svd.singularValues().tail(1)(0);
  out.condition_number =
      smin > 0.0 ? svd.singularValues()(0) / smin : std::numeric_limits<double>::infinity();
  return out;
}

RidgeForm poly_to_ridge(const Polynomial& q, const std::vector<Point>& directions) {
  const int d = q.dimension();
  const int k = q.degree_bound();
  Eigen::MatrixXd M = matching_matrix(directions, d, k);
  Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(q.coefficients().data(),
                                                          q.coefficients().size());
  // Minimum-norm least-squares solution; underdetermined systems are expected.
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(M);
  Eigen::VectorXd c = cod.solve(rhs);
  double residual = (M * c - rhs).norm();
  if (residual > 1e-8 * (1.0 + rhs.norm()))
    throw std::runtime_error("poly_to_ridge: rank-deficient-directions");

  RidgeForm form;
  form.directions = directions;
  form.univariate.resize(directions.size());
  for (std::size_t j = 0; j < directions.size(); ++j) {
    form.univariate[j].assign(k + 1, 0.0);
    for (int i = 0; i <= k; ++i) form.univariate[j][i] = c(j * (k + 1) + i);
  }
  return form;
}

}  // namespace ridgelab
