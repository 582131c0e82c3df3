#include "ridgelab/minimax_lp.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace ridgelab {

// min t s.t. |f_i - phi_i . u| <= t is solved through its dual
//   min sum_i f_i (y_i^B - y_i^A)
//   s.t. sum_i phi_ij (y_i^A - y_i^B) = 0 for each j,
//        sum_i (y_i^A + y_i^B) = 1,  y >= 0,
// a standard-form LP with m+1 rows and 2N columns. Revised simplex with
// Bland's rule; u and t are read off the final simplex multipliers.
MinimaxFit chebyshev_fit(const std::vector<std::vector<double>>& basis,
                         const std::vector<double>& values, int max_iterations) {
  const int n_pts = static_cast<int>(values.size());
  if (n_pts == 0 || basis.size() != values.size())
    throw std::invalid_argument("chebyshev_fit: basis/value size mismatch");
  const int m = static_cast<int>(basis[0].size());
  const int rows = m + 1;
  const int n_cols = 2 * n_pts;        // structural columns
  const int total = n_cols + rows;     // plus phase-1 artificials

  auto column = [&](int q, Eigen::VectorXd& a) {
    a.setZero();
    if (q >= n_cols) {
      a[q - n_cols] = 1.0;
      return;
    }
    const int i = q / 2;
    const double sgn = (q % 2 == 0) ? 1.0 : -1.0;  // even: y^A, odd: y^B
    for (int j = 0; j < m; ++j) a[j] = sgn * basis[i][j];
    a[m] = 1.0;
  };
  auto cost = [&](int q, bool phase1) -> double {
    if (q >= n_cols) return phase1 ? 1.0 : 0.0;
    if (phase1) return 0.0;
    const int i = q / 2;
    return (q % 2 == 0) ? -values[i] : values[i];
  };

  Eigen::VectorXd b = Eigen::VectorXd::Zero(rows);
  b[m] = 1.0;

  std::vector<int> basic(rows);
  for (int j = 0; j < rows; ++j) basic[j] = n_cols + j;
  Eigen::MatrixXd B = Eigen::MatrixXd::Identity(rows, rows);
  Eigen::VectorXd xb = b;

  MinimaxFit fit;
  Eigen::VectorXd a(rows), dir(rows), pi(rows), cb(rows);
  const double tol = 1e-10;

  bool phase1 = true;
  for (int iter = 0; iter < max_iterations; ++iter) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
    for (int j = 0; j < rows; ++j) cb[j] = cost(basic[j], phase1);
    pi = lu.transpose().solve(cb);

    if (phase1) {
      double infeas = 0.0;
      for (int j = 0; j < rows; ++j)
        if (basic[j] >= n_cols) infeas += xb[j];
      if (infeas < 1e-9) {
        phase1 = false;
        continue;
      }
    }

    // Dantzig pricing at first, Bland's rule late to rule out cycling.
    const bool bland = iter > max_iterations / 2;
    int entering = -1;
    double most_negative = -tol;
    for (int q = 0; q < n_cols; ++q) {
      column(q, a);
      double rc = cost(q, phase1) - pi.dot(a);
      if (rc < most_negative) {
        entering = q;
        if (bland) break;
        most_negative = rc;
      }
    }
    if (entering < 0) {
      if (phase1) return fit;  // infeasible; cannot happen for this LP
      // optimal
      fit.converged = true;
      fit.iterations = iter;
      fit.coefficients.resize(m);
      for (int j = 0; j < m; ++j) fit.coefficients[j] = -pi[j];
      fit.error = std::max(0.0, -pi[m]);
      return fit;
    }

    column(entering, a);
    dir = lu.solve(a);
    int leave = -1;
    double best_ratio = 0.0;
    for (int j = 0; j < rows; ++j) {
      if (dir[j] > tol) {
        double ratio = xb[j] / dir[j];
        if (leave < 0 || ratio < best_ratio - tol ||
            (ratio < best_ratio + tol && basic[j] < basic[leave])) {
          leave = j;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) throw std::runtime_error("chebyshev_fit: unbounded dual (bad basis)");

    xb -= best_ratio * dir;
    xb[leave] = best_ratio;
    basic[leave] = entering;
    B.col(leave) = a;
    for (int j = 0; j < rows; ++j) xb[j] = std::max(xb[j], 0.0);
  }
  fit.iterations = max_iterations;
  return fit;  // converged stays false
}

}  // namespace ridgelab
