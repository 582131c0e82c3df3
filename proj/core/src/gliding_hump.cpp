#include "ridgelab/gliding_hump.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ridgelab {

double GlidingHumpSeries::eval(const Point& x) const {
  double s = 0.0;
  for (int j = 0; j < truncation; ++j) s += weights[j] * components[j].eval(x);
  return s;
}

TargetFunction GlidingHumpSeries::as_target(const std::string& label) const {
  GlidingHumpSeries copy = *this;
  int d = components.empty() ? 1 : components[0].signed_grid().grid.domain.dimension();
  return TargetFunction(label, d, [copy](const Point& x) { return copy.eval(x); });
}

TargetFunction GlidingHumpSeries::partial_sum(int terms, const std::string& label) const {
  GlidingHumpSeries copy = *this;
  copy.truncation = std::clamp(terms, 0, truncation);
  return copy.as_target(label);
}

GlidingHumpSeries gliding_hump_compose(const std::vector<ResonanceFunction>& components,
                                       const std::vector<long long>& indices,
                                       const AbstractModulus& omega, const RateFunction& phi,
                                       int r, int truncation) {
  if (indices.size() != components.size())
    throw std::invalid_argument("gliding_hump_compose: one index per component");
  if (truncation < 1 || truncation > static_cast<int>(components.size()))
    throw std::invalid_argument("gliding_hump_compose: truncation out of range");
  for (std::size_t j = 1; j < indices.size(); ++j)
    if (indices[j] <= indices[j - 1])
      throw std::invalid_argument("gliding_hump_compose: non-increasing-index-sequence");

  GlidingHumpSeries series;
  series.indices = indices;
  series.components = components;
  series.truncation = truncation;
  for (std::size_t j = 0; j < indices.size(); ++j) {
    double w = omega(std::pow(phi(static_cast<double>(indices[j])), r));
    series.weights.push_back(w);
    if (static_cast<int>(j) < truncation) series.weight_sum += w;
    if (j > 0 && indices[j] < 4 * indices[j - 1]) series.rapid_growth = false;
  }
  for (std::size_t j = 1; j < series.weights.size(); ++j)
    if (series.weights[j] >= series.weights[j - 1])
      throw std::invalid_argument("gliding_hump_compose: weights must be strictly decreasing");
  return series;
}

ResonanceConditionReport check_resonance_conditions(
    const std::vector<ResonanceFunction>& components, const std::vector<long long>& indices,
    const Activation& sigma, int r, const SolverConfig& cfg, double slack,
    const std::function<int(long long)>& width_rule) {
  if (indices.size() != components.size())
    throw std::invalid_argument("check_resonance_conditions: one index per component");
  ResonanceConditionReport report;
  report.slack = slack;
  report.pass = true;

  for (std::size_t j = 0; j < components.size(); ++j) {
    const ResonanceFunction& h = components[j];
    const Domain& domain = h.signed_grid().grid.domain;
    ResonanceConditionRow row;
    row.n = indices[j];
    row.solver_width = width_rule ? width_rule(indices[j])
                                  : static_cast<int>(std::max<long long>(1, indices[j] / 4));

    TargetFunction ht = h.as_target("resonance-" + std::to_string(indices[j]));
    row.sup_norm = norm(ht, domain, NormQuery{kSupNorm, TensorGridSampling{129}});

    const double two_tau = h.scale();
    std::vector<double> deltas = {2.0 / two_tau, 1.0 / two_tau, 0.5 / two_tau, 0.25 / two_tau};
    row.modulus_report = resonance_modulus_bound(h, r, deltas);

    BestApproxResult best = best_approx(ht, row.solver_width, sigma, kSupNorm, domain, cfg);
    row.best_upper = best.error;
    for (std::size_t i = 0; i < h.grid_points().size(); ++i) {
      double gap = std::abs(h.signed_grid().signs[i] - net_eval(best.params, h.grid_points()[i]));
      row.grid_gap = std::max(row.grid_gap, gap);
    }
    row.ok = row.sup_norm <= 1.0 + 1e-9 && row.grid_gap >= 1.0 - slack;
    report.pass = report.pass && row.ok;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace ridgelab
