#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ridgelab/point.hpp"

namespace ridgelab {

enum class DomainKind { Cube, Ball, IntervalProduct };

/// Open cube (0,1)^d, open unit ball, or a product of open intervals.
class Domain {
 public:
  static Domain unit_cube(int d);
  static Domain unit_ball(int d);
  static Domain box(std::vector<std::pair<double, double>> bounds);

  DomainKind kind() const { return kind_; }
  int dimension() const { return d_; }

  /// Per-axis bounds; for the ball this is the bounding box [-1,1]^d.
  const std::vector<std::pair<double, double>>& bounds() const { return bounds_; }

  bool contains(const Point& x) const;

  /// Membership in the shrunk domain Omega(v) = {x : x + t v in Omega, t in [0,1]}.
  /// Both supported shapes are convex, so checking the segment endpoints suffices.
  bool in_shrunk(const Point& x, const Point& v) const;

  std::function<bool(const Point&)> shrink_predicate(Point v) const;

  double box_volume() const;
  std::string describe() const;

 private:
  Domain(DomainKind kind, int d, std::vector<std::pair<double, double>> bounds);

  DomainKind kind_;
  int d_;
  std::vector<std::pair<double, double>> bounds_;
};

}  // namespace ridgelab
