#include "ridgelab/resonance.hpp"

#include <cmath>
#include <stdexcept>

#include "ridgelab/smoothness.hpp"

namespace ridgelab {

double bump(double x) {
  const double s = x * x;
  if (s >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - s));
}

ResonanceFunction::ResonanceFunction(SignedGrid sg) : sg_(std::move(sg)) {
  points_ = ridgelab::grid_points(sg_.grid);
  if (sg_.signs.size() != points_.size())
    throw std::invalid_argument("ResonanceFunction: one sign per grid point required");
  for (int s : sg_.signs)
    if (s != -1 && s != 1) throw std::invalid_argument("ResonanceFunction: signs must be +-1");
  const auto& bounds = sg_.grid.domain.bounds();
  scale_.resize(bounds.size());
  for (std::size_t k = 0; k < bounds.size(); ++k)
    scale_[k] = 2.0 * sg_.grid.steps / (bounds[k].second - bounds[k].first);
}

double ResonanceFunction::eval(const Point& x) const {
  const int d = sg_.grid.domain.dimension();
  const int tau = sg_.grid.steps;
  const auto& bounds = sg_.grid.domain.bounds();
  // Supports have radius 1/scale_k, half a grid cell, so only the bump at the
  // nearest grid point can be nonzero.
  long long index = 0;
  double prod = 1.0;
  for (int k = 0; k < d; ++k) {
    const auto& [lo, hi] = bounds[k];
    double t = (x[k] - lo) / (hi - lo) * tau;
    long long i = std::llround(t);
    if (i < 0) i = 0;
    if (i > tau) i = tau;
    index = index * (tau + 1) + i;
    double z = lo + (hi - lo) * (static_cast<double>(i) / tau);
    prod *= bump((x[k] - z) * scale_[k]);
    if (prod == 0.0) return 0.0;
  }
  return sg_.signs[static_cast<std::size_t>(index)] * prod;
}

TargetFunction ResonanceFunction::as_target(const std::string& label) const {
  ResonanceFunction copy = *this;
  return TargetFunction(label, sg_.grid.domain.dimension(),
                        [copy](const Point& x) { return copy.eval(x); });
}

ResonanceFunction resonance_function(const SignedGrid& sg) { return ResonanceFunction(sg); }

ResonanceModulusReport resonance_modulus_bound(const ResonanceFunction& rf, int r,
                                               const std::vector<double>& deltas, double p) {
  ResonanceModulusReport report;
  report.order = r;
  const Domain& domain = rf.signed_grid().grid.domain;
  TargetFunction h = rf.as_target();
  const double two_tau = rf.scale();
  for (double delta : deltas) {
    ModulusQuery q;
    q.order = r;
    q.delta = delta;
    q.norm = NormQuery{p, TensorGridSampling{65}};
    if (domain.dimension() == 1)
      q.directions = AxisDirections{};
    else
      q.directions = RandomDirections{8, 7};
    double omega = modulus(h, q, domain).value;
    double ref = std::min(std::pow(2.0, r), std::pow(two_tau * delta, r));
    report.deltas.push_back(delta);
    report.moduli.push_back(omega);
    report.reference.push_back(ref);
    if (ref > 0.0) report.implied_constant = std::max(report.implied_constant, omega / ref);
  }
  return report;
}

}  // namespace ridgelab
