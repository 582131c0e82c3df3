#pragma once

#include <vector>

#include "ridgelab/domain.hpp"
#include "ridgelab/point.hpp"

namespace ridgelab {

/// Equidistant tensor grid over a cube/box domain with tau steps per axis,
/// i.e. (tau+1)^d points.
struct GridSpec {
  Domain domain;
  int steps;  // tau >= 1
};

/// Lexicographically ordered grid {j/tau}^d mapped affinely into the box bounds.
/// Rejects ball domains.
std::vector<Point> grid_points(const GridSpec& g);

}  // namespace ridgelab
