#include "ridgelab/target_function.hpp"

#include <cmath>

namespace ridgelab {
namespace {

// Central difference in one axis applied recursively over the multi-index.
double fd_derivative(const TargetFunction& f, std::vector<int> alpha, const Point& x, double h) {
  int axis = -1;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] > 0) {
      axis = static_cast<int>(i);
      break;
    }
  if (axis < 0) return f(x);
  alpha[axis] -= 1;
  Point xp = x, xm = x;
  xp[axis] += h;
  xm[axis] -= h;
  return (fd_derivative(f, alpha, xp, h) - fd_derivative(f, alpha, xm, h)) / (2.0 * h);
}

}  // namespace

double TargetFunction::derivative_or_fd(const std::vector<int>& alpha, const Point& x) const {
  if (df_) return df_(alpha, x);
  const double h = 1e-4;
  double coarse = fd_derivative(*this, alpha, x, 2.0 * h);
  double fine = fd_derivative(*this, alpha, x, h);
  return fine + (fine - coarse) / 3.0;  // one Richardson step for O(h^2) schemes
}

TargetFunction TargetFunction::scaled_by(double c) const {
  TargetFunction g(label_ + "*" + std::to_string(c), d_,
                   [f = f_, c](const Point& x) { return c * f(x); });
  if (df_)
    g.with_derivatives([df = df_, c](const std::vector<int>& a, const Point& x) {
      return c * df(a, x);
    });
  g.with_smoothness(tag_);
  return g;
}

TargetFunction TargetFunction::plus(const TargetFunction& other) const {
  if (other.d_ != d_) throw std::invalid_argument("TargetFunction::plus: dimension mismatch");
  TargetFunction g(label_ + "+" + other.label_, d_,
                   [f = f_, h = other.f_](const Point& x) { return f(x) + h(x); });
  if (df_ && other.df_)
    g.with_derivatives([df = df_, dh = other.df_](const std::vector<int>& a, const Point& x) {
      return df(a, x) + dh(a, x);
    });
  return g;
}

}  // namespace ridgelab
