#include "ridgelab/norm.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace ridgelab {
namespace {

std::vector<Point> tensor_points(const Domain& domain, int resolution, bool midpoint) {
  const int d = domain.dimension();
  const auto& bounds = domain.bounds();
  std::vector<Point> pts;
  std::vector<int> idx(d, 0);
  const int n = resolution;
  for (;;) {
    Point x(d);
    for (int k = 0; k < d; ++k) {
      const auto& [lo, hi] = bounds[k];
      double t = midpoint ? (idx[k] + 0.5) / n : static_cast<double>(idx[k]) / (n - 1);
      x[k] = lo + (hi - lo) * t;
    }
    pts.push_back(std::move(x));
    int k = d - 1;
    while (k >= 0 && idx[k] == n - 1) idx[k--] = 0;
    if (k < 0) break;
    ++idx[k];
  }
  return pts;
}

}  // namespace

SamplePlan make_sample_plan(const Domain& domain, const NormQuery& q) {
  SamplePlan plan;
  plan.p = q.p;
  const bool sup = std::isinf(q.p);
  if (std::holds_alternative<TensorGridSampling>(q.sampling)) {
    int res = std::get<TensorGridSampling>(q.sampling).resolution;
    if (res < 2) throw std::invalid_argument("NormQuery: resolution must be >= 2 per axis");
    auto pts = tensor_points(domain, res, /*midpoint=*/!sup);
    double total = static_cast<double>(pts.size());
    if (domain.kind() == DomainKind::Ball) {
      std::vector<Point> inside;
      for (auto& x : pts)
        if (dot(x, x) < 1.0) inside.push_back(std::move(x));
      pts = std::move(inside);
    }
    plan.weight = domain.box_volume() / total;
    plan.points = std::move(pts);
  } else {
    const auto& mc = std::get<MonteCarloSampling>(q.sampling);
    if (mc.count < 1) throw std::invalid_argument("NormQuery: monte-carlo count must be >= 1");
    std::mt19937_64 rng(mc.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const auto& bounds = domain.bounds();
    long kept = 0;
    long drawn = 0;
    // Rejection sampling from the bounding box; draws count toward the measure.
    while (kept < mc.count) {
      Point x(domain.dimension());
      for (int k = 0; k < domain.dimension(); ++k) {
        const auto& [lo, hi] = bounds[k];
        x[k] = lo + (hi - lo) * unif(rng);
      }
      ++drawn;
      if (domain.kind() != DomainKind::Ball || dot(x, x) < 1.0) {
        plan.points.push_back(std::move(x));
        ++kept;
      }
      if (drawn > 1000 * mc.count + 1000)
        throw std::runtime_error("make_sample_plan: rejection sampling failed to fill quota");
    }
    plan.weight = domain.box_volume() / static_cast<double>(drawn);
  }
  return plan;
}

double norm_estimate(const std::function<double(const Point&)>& f, const SamplePlan& plan) {
  return norm_estimate_where(f, plan, [](const Point&) { return true; });
}

double norm_estimate_where(const std::function<double(const Point&)>& f, const SamplePlan& plan,
                           const std::function<bool(const Point&)>& keep,
                           long* admissible_count) {
  long used = 0;
  double acc = 0.0;
  const bool sup = std::isinf(plan.p);
  for (const Point& x : plan.points) {
    if (!keep(x)) continue;
    ++used;
    double v = std::abs(f(x));
    if (sup)
      acc = std::max(acc, v);
    else
      acc += std::pow(v, plan.p);
  }
  if (admissible_count) *admissible_count = used;
  if (used == 0) throw std::runtime_error("norm: empty-sample-set");
  if (sup) return acc;
  return std::pow(plan.weight * acc, 1.0 / plan.p);
}

double norm(const TargetFunction& f, const Domain& domain, const NormQuery& q) {
  return norm_fn([&](const Point& x) { return f(x); }, domain, q);
}

double norm_fn(const std::function<double(const Point&)>& f, const Domain& domain,
               const NormQuery& q) {
  return norm_estimate(f, make_sample_plan(domain, q));
}

}  // namespace ridgelab
