#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ridgelab/domain.hpp"
#include "ridgelab/norm.hpp"
#include "ridgelab/target_function.hpp"

namespace ridgelab {

struct AxisDirections {};
struct RandomDirections {
  int count = 8;
  unsigned seed = 7;
};
struct ExplicitDirections {
  std::vector<Point> directions;  // magnitudes must not exceed delta
};

struct ModulusQuery {
  int order = 1;       // r >= 1
  double delta = 0.1;  // > 0
  NormQuery norm;
  std::variant<AxisDirections, RandomDirections, ExplicitDirections> directions =
      AxisDirections{};
};

struct ModulusResult {
  double value = 0.0;
  int directions_tried = 0;
  int directions_admissible = 0;  // directions with a nonempty shrunk-domain sample
  long min_admissible_points = 0;
  long max_admissible_points = 0;
};

/// r-th radial difference sum_{j=0..r} (-1)^(r-j) C(r,j) f(x + j v).
/// x must lie in Omega(r v).
double radial_difference(const TargetFunction& f, int r, const Point& v, const Point& x,
                         const Domain& domain);

/// Sampled radial modulus of smoothness: max over sampled directions |v| <= delta
/// of ||Delta_v^r f|| on Omega(r v). A lower bound of the true supremum.
ModulusResult modulus(const TargetFunction& f, const ModulusQuery& q, const Domain& domain);

/// Sum over multi-indices |alpha| = r of the L^p norms of the order-r partials.
double sobolev_seminorm(const TargetFunction& f, int r, const NormQuery& q, const Domain& domain);

struct DerivativeBoundRow {
  double delta;
  double modulus_value;
  double ratio;  // omega_r / (delta^r * seminorm)
};
struct DerivativeBoundReport {
  std::vector<DerivativeBoundRow> rows;
  double seminorm = 0.0;
  double max_ratio = 0.0;
  bool diverging = false;  // ratios grow monotonically toward small delta
};

/// Empirical check of omega_r(f,delta) <= C_r delta^r |f|_{W^r_p}.
DerivativeBoundReport check_derivative_bound(const TargetFunction& f, int r,
                                             const std::vector<double>& deltas,
                                             const NormQuery& q, const Domain& domain);

struct KFunctionalResult {
  double value = 0.0;
  double best_width = 0.0;  // 0 means the zero function or f itself won
};

/// Upper bound of K(delta, f, X, W^r) over a finite Gaussian mollification
/// family plus the trivial candidates g = 0 and (when f is smooth) g = f.
KFunctionalResult k_functional_estimate(const TargetFunction& f, double delta, int r,
                                        const NormQuery& q, const Domain& domain,
                                        const std::vector<double>& widths = {});

std::vector<std::vector<int>> multi_indices_of_order(int d, int r);

}  // namespace ridgelab
