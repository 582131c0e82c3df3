#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ridgelab/best_approx.hpp"
#include "ridgelab/modulus_forms.hpp"
#include "ridgelab/resonance.hpp"

namespace ridgelab {

/// Truncated gliding-hump sum f_m = sum_{j<=m} omega([phi(n_j)]^r) h_{n_j}.
struct GlidingHumpSeries {
  std::vector<long long> indices;  // n_1 < n_2 < ...
  std::vector<double> weights;     // omega([phi(n_j)]^r)
  std::vector<ResonanceFunction> components;
  int truncation = 0;
  double weight_sum = 0.0;  // sup-norm bound (each component has sup 1)
  bool rapid_growth = true;  // n_{j+1} >= 4 n_j throughout

  double eval(const Point& x) const;
  TargetFunction as_target(const std::string& label = "gliding-hump") const;
  TargetFunction partial_sum(int terms, const std::string& label) const;
};

/// Builds the truncated series. Indices must be strictly increasing, one per
/// component; weights are evaluated exactly from omega and phi.
GlidingHumpSeries gliding_hump_compose(const std::vector<ResonanceFunction>& components,
                                       const std::vector<long long>& indices,
                                       const AbstractModulus& omega, const RateFunction& phi,
                                       int r, int truncation);

struct ResonanceConditionRow {
  long long n = 0;
  double sup_norm = 0.0;                  // measured, should be <= 1
  ResonanceModulusReport modulus_report;  // boundedness of the implied constant
  int solver_width = 0;
  double best_upper = 0.0;  // best_approx error against the component
  double grid_gap = 0.0;    // max over grid points |h(z) - g(z)| for the best g
  bool heuristic = true;
  bool ok = false;
};

struct ResonanceConditionReport {
  std::vector<ResonanceConditionRow> rows;
  double slack = 0.1;
  bool pass = false;
};

/// Checks the three ingredients of the counterexample recipe on each
/// component: unit sup-norm, modulus envelope, and the lower gap: the best
/// network the solver finds must still miss some grid sign by >= 1 - slack.
/// width_rule maps a component index n_j to the solver width (default
/// max(1, n/4), the desk-scale stand-in for the 4n-capacity pairing).
ResonanceConditionReport check_resonance_conditions(
    const std::vector<ResonanceFunction>& components, const std::vector<long long>& indices,
    const Activation& sigma, int r, const SolverConfig& cfg, double slack = 0.1,
    const std::function<int(long long)>& width_rule = {});

}  // namespace ridgelab
