#pragma once

#include <functional>
#include <limits>
#include <variant>
#include <vector>

#include "ridgelab/domain.hpp"
#include "ridgelab/target_function.hpp"

namespace ridgelab {

inline constexpr double kSupNorm = std::numeric_limits<double>::infinity();

struct TensorGridSampling {
  int resolution = 129;  // points per axis
};
struct MonteCarloSampling {
  long count = 4096;
  unsigned seed = 1;
};

struct NormQuery {
  double p = kSupNorm;
  std::variant<TensorGridSampling, MonteCarloSampling> sampling = TensorGridSampling{};
};

/// A concrete sampling of a domain: points plus one quadrature weight per
/// point (uniform for both midpoint grids and Monte Carlo).
struct SamplePlan {
  std::vector<Point> points;
  double weight = 0.0;  // measure per point; unused for sup norms
  double p = kSupNorm;
};

/// Cube/box domains use midpoint tensor grids for p < inf and closed
/// (endpoint-inclusive) grids for the sup norm. Ball domains keep only
/// the points of the bounding-box plan that fall inside the ball.
SamplePlan make_sample_plan(const Domain& domain, const NormQuery& q);

double norm_estimate(const std::function<double(const Point&)>& f, const SamplePlan& plan);

/// Same estimate restricted to points satisfying `keep`; for p < inf the
/// dropped points simply lose their cells. Throws empty-sample-set if no
/// point survives.
double norm_estimate_where(const std::function<double(const Point&)>& f, const SamplePlan& plan,
                           const std::function<bool(const Point&)>& keep,
                           long* admissible_count = nullptr);

double norm(const TargetFunction& f, const Domain& domain, const NormQuery& q);
double norm_fn(const std::function<double(const Point&)>& f, const Domain& domain,
               const NormQuery& q);

}  // namespace ridgelab
