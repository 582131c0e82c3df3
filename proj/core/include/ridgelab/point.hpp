#pragma once

#include <cmath>
#include <vector>

namespace ridgelab {

using Point = std::vector<double>;

inline double dot(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double euclidean_norm(const Point& a) { return std::sqrt(dot(a, a)); }

inline Point axpy(double t, const Point& v, const Point& x) {
  Point y = x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += t * v[i];
  return y;
}

inline Point scaled(const Point& v, double t) {
  Point y = v;
  for (double& c : y) c *= t;
  return y;
}

}  // namespace ridgelab
