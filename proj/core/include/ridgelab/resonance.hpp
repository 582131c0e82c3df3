#pragma once

#include <limits>
#include <string>
#include <vector>

#include "ridgelab/grid.hpp"
#include "ridgelab/target_function.hpp"

namespace ridgelab {

/// exp(1 - 1/(1 - x^2)) for |x| < 1, 0 otherwise. Even, peak value 1 at 0.
double bump(double x);

/// One sign per grid point, aligned with grid_points(grid) order.
struct SignedGrid {
  GridSpec grid;
  std::vector<int> signs;  // each -1 or +1
};

/// h(x) = sum_z s_z prod_k bump((x_k - z_k) * 2 tau / L_k): a bump of the
/// sign's height on each grid cell, supports touching only at borders. On the
/// unit cube the per-axis factor is 2 tau.
class ResonanceFunction {
 public:
  explicit ResonanceFunction(SignedGrid sg);

  double eval(const Point& x) const;  // O(d): only the nearest summand can be nonzero
  const SignedGrid& signed_grid() const { return sg_; }
  const std::vector<Point>& grid_points() const { return points_; }
  double scale() const { return scale_[0]; }  // 2 tau on the unit cube

  TargetFunction as_target(const std::string& label = "resonance") const;

 private:
  SignedGrid sg_;
  std::vector<Point> points_;
  std::vector<double> scale_;  // per axis, 2 tau / (hi - lo)
};

ResonanceFunction resonance_function(const SignedGrid& sg);

struct ResonanceModulusReport {
  int order = 1;
  std::vector<double> deltas;
  std::vector<double> moduli;     // omega_r(h, delta) on samples
  std::vector<double> reference;  // min{2^r, (2 tau delta)^r}
  double implied_constant = 0.0;  // max moduli / reference
};

/// Measures omega_r of a resonance function across deltas against the crude
/// envelope min{2^r, (2 tau delta)^r}; the max ratio is the implied constant,
/// which stays bounded across tau sweeps.
ResonanceModulusReport resonance_modulus_bound(const ResonanceFunction& rf, int r,
                                               const std::vector<double>& deltas,
                                               double p = std::numeric_limits<double>::infinity());

}  // namespace ridgelab
