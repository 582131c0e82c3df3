#include "ridgelab/poly_approx.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "ridgelab/minimax_lp.hpp"

namespace ridgelab {
namespace {

double monomial(const Point& x, const MultiIndex& alpha) {
  double m = 1.0;
  for (std::size_t j = 0; j < alpha.size(); ++j)
    for (int p = 0; p < alpha[j]; ++p) m *= x[j];
  return m;
}

}  // namespace

PolyApproxResult poly_best_approx(const TargetFunction& f, int k, const NormQuery& q,
                                  const Domain& domain) {
  const int d = f.dimension();
  const auto basis = multi_indices_up_to(d, k);
  const SamplePlan plan = make_sample_plan(domain, q);
  const std::size_t n_pts = plan.points.size();
  if (static_cast<long long>(n_pts) < static_cast<long long>(basis.size()))
    throw std::invalid_argument("poly_best_approx: underdetermined-sample");

  std::vector<double> values(n_pts);
  for (std::size_t i = 0; i < n_pts; ++i) values[i] = f(plan.points[i]);

  std::vector<double> coef;
  if (std::isinf(q.p)) {
    std::vector<std::vector<double>> rows(n_pts, std::vector<double>(basis.size()));
    for (std::size_t i = 0; i < n_pts; ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        rows[i][j] = monomial(plan.points[i], basis[j]);
    MinimaxFit fit = chebyshev_fit(rows, values);
    if (!fit.converged) throw std::runtime_error("poly_best_approx: minimax LP did not converge");
    coef = fit.coefficients;
  } else {
    // Weighted least squares doubles as the p=2 route and a serviceable
    // starting point for other p; only p=2 is advertised.
    Eigen::MatrixXd A(n_pts, basis.size());
    Eigen::VectorXd b(n_pts);
    for (std::size_t i = 0; i < n_pts; ++i) {
      b(i) = values[i];
      for (std::size_t j = 0; j < basis.size(); ++j)
        A(i, j) = monomial(plan.points[i], basis[j]);
    }
    Eigen::VectorXd c = A.colPivHouseholderQr().solve(b);
    coef.assign(c.data(), c.data() + c.size());
  }

  PolyApproxResult out{Polynomial(d, k, coef), 0.0};
  out.error = norm_estimate(
      [&](const Point& x) { return f(x) - out.poly.eval(x); }, plan);
  return out;
}

}  // namespace ridgelab
