#include "ridgelab/grid.hpp"

#include <stdexcept>

namespace ridgelab {

std::vector<Point> grid_points(const GridSpec& g) {
  if (g.domain.kind() == DomainKind::Ball)
    throw std::invalid_argument("grid_points: non-cube-domain");
  if (g.steps < 1) throw std::invalid_argument("grid_points: steps must be >= 1");
  const int d = g.domain.dimension();
  const int tau = g.steps;
  const auto& bounds = g.domain.bounds();

  std::vector<Point> pts;
  std::vector<int> idx(d, 0);
  for (;;) {
    Point x(d);
    for (int k = 0; k < d; ++k) {
      const auto& [lo, hi] = bounds[k];
      x[k] = lo + (hi - lo) * (static_cast<double>(idx[k]) / tau);
    }
    pts.push_back(std::move(x));
    int k = d - 1;
    while (k >= 0 && idx[k] == tau) idx[k--] = 0;
    if (k < 0) break;
    ++idx[k];
  }
  return pts;
}

}  // namespace ridgelab
