#include "ridgelab/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

namespace ridgelab {
namespace {

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

double radial_difference_unchecked(const TargetFunction& f, int r, const Point& v,
                                   const Point& x) {
  double s = 0.0;
  for (int j = 0; j <= r; ++j) {
    double sign = ((r - j) % 2 == 0) ? 1.0 : -1.0;
    s += sign * binomial(r, j) * f(axpy(static_cast<double>(j), v, x));
  }
  return s;
}

std::vector<Point> sample_directions(const ModulusQuery& q, int d) {
  std::vector<Point> dirs;
  auto push_scaled = [&](const Point& unit) {
    dirs.push_back(scaled(unit, q.delta));
    dirs.push_back(scaled(unit, q.delta / 2.0));
  };
  if (std::holds_alternative<ExplicitDirections>(q.directions)) {
    for (const Point& v : std::get<ExplicitDirections>(q.directions).directions) {
      if (euclidean_norm(v) > q.delta * (1.0 + 1e-12))
        throw std::invalid_argument("modulus: explicit direction longer than delta");
      dirs.push_back(v);
    }
    return dirs;
  }
  for (int k = 0; k < d; ++k) {
    Point e(d, 0.0);
    e[k] = 1.0;
    push_scaled(e);
    e[k] = -1.0;
    push_scaled(e);
  }
  if (std::holds_alternative<RandomDirections>(q.directions)) {
    const auto& rd = std::get<RandomDirections>(q.directions);
    std::mt19937_64 rng(rd.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < rd.count; ++i) {
      Point u(d);
      double len = 0.0;
      do {
        for (double& c : u) c = gauss(rng);
        len = euclidean_norm(u);
      } while (len < 1e-12);
      push_scaled(scaled(u, 1.0 / len));
    }
  }
  return dirs;
}

}  // namespace

std::vector<std::vector<int>> multi_indices_of_order(int d, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> alpha(d, 0);
  // enumerate compositions of r into d parts, lexicographic
  std::function<void(int, int)> rec = [&](int axis, int remaining) {
    if (axis == d - 1) {
      alpha[axis] = remaining;
      out.push_back(alpha);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      alpha[axis] = v;
      rec(axis + 1, remaining - v);
    }
  };
  rec(0, r);
  return out;
}

double radial_difference(const TargetFunction& f, int r, const Point& v, const Point& x,
                         const Domain& domain) {
  if (r < 1) throw std::invalid_argument("radial_difference: order must be >= 1");
  if (!domain.in_shrunk(x, scaled(v, static_cast<double>(r))))
    throw std::domain_error("radial_difference: point-outside-shrunk-domain");
  return radial_difference_unchecked(f, r, v, x);
}

ModulusResult modulus(const TargetFunction& f, const ModulusQuery& q, const Domain& domain) {
  if (q.order < 1) throw std::invalid_argument("modulus: order must be >= 1");
  if (!(q.delta > 0.0)) throw std::invalid_argument("modulus: delta must be positive");

  const SamplePlan plan = make_sample_plan(domain, q.norm);
  const auto dirs = sample_directions(q, domain.dimension());
  if (dirs.empty()) throw std::invalid_argument("modulus: empty direction sample");

  ModulusResult res;
  res.directions_tried = static_cast<int>(dirs.size());
  res.min_admissible_points = static_cast<long>(plan.points.size());
  bool any = false;
  for (const Point& v : dirs) {
    const Point rv = scaled(v, static_cast<double>(q.order));
    long count = 0;
    double value;
    try {
      value = norm_estimate_where(
          [&](const Point& x) { return radial_difference_unchecked(f, q.order, v, x); }, plan,
          [&](const Point& x) { return domain.in_shrunk(x, rv); }, &count);
    } catch (const std::runtime_error&) {
      continue;  // no admissible points for this direction
    }
    any = true;
    ++res.directions_admissible;
    res.value = std::max(res.value, value);
    res.min_admissible_points = std::min(res.min_admissible_points, count);
    res.max_admissible_points = std::max(res.max_admissible_points, count);
  }
  if (!any) throw std::runtime_error("modulus: no-admissible-points");
  return res;
}

double sobolev_seminorm(const TargetFunction& f, int r, const NormQuery& q,
                        const Domain& domain) {
  const SamplePlan plan = make_sample_plan(domain, q);
  double total = 0.0;
  for (const auto& alpha : multi_indices_of_order(f.dimension(), r)) {
    total += norm_estimate(
        [&](const Point& x) { return f.derivative_or_fd(alpha, x); }, plan);
  }
  return total;
}

DerivativeBoundReport check_derivative_bound(const TargetFunction& f, int r,
                                             const std::vector<double>& deltas,
                                             const NormQuery& q, const Domain& domain) {
  DerivativeBoundReport report;
  report.seminorm = sobolev_seminorm(f, r, q, domain);
  std::vector<double> sorted = deltas;
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  for (double delta : sorted) {
    ModulusQuery mq{r, delta, q, AxisDirections{}};
    double w = modulus(f, mq, domain).value;
    double denom = std::pow(delta, r) * report.seminorm;
    double ratio = denom > 0.0 ? w / denom : 0.0;
    report.rows.push_back({delta, w, ratio});
    report.max_ratio = std::max(report.max_ratio, ratio);
  }
  // Divergence heuristic: ratios strictly increase toward delta -> 0 and the
  // smallest-delta ratio dominates the largest-delta ratio by 2x.
  if (report.rows.size() >= 3) {
    bool increasing = true;
    for (std::size_t i = 1; i < report.rows.size(); ++i)
      increasing = increasing && report.rows[i].ratio > report.rows[i - 1].ratio;
    report.diverging =
        increasing && report.rows.back().ratio > 2.0 * report.rows.front().ratio;
  }
  return report;
}

KFunctionalResult k_functional_estimate(const TargetFunction& f, double delta, int r,
                                        const NormQuery& q, const Domain& domain,
                                        const std::vector<double>& widths) {
  const SamplePlan plan = make_sample_plan(domain, q);
  const int d = f.dimension();
  KFunctionalResult best;
  best.value = norm_estimate([&](const Point& x) { return f(x); }, plan);  // g = 0
  best.best_width = 0.0;

  if (f.has_derivatives()) {
    double semi = sobolev_seminorm(f, r, q, domain);
    if (delta * semi < best.value) {
      best.value = delta * semi;  // g = f
      best.best_width = 0.0;
    }
  }

  std::vector<double> ws = widths;
  if (ws.empty()) {
    double base = std::pow(std::max(delta, 1e-12), 1.0 / r);
    for (int i = 0; i <= 6; ++i) ws.push_back(base * std::pow(0.5, i));
  }

  // Gauss-Hermite style nodes for exp(-t^2/2)/sqrt(2pi), 7 points per axis.
  static const double nodes[7] = {-3.7504397, -2.3667594, -1.1544054, 0.0,
                                  1.1544054,  2.3667594,  3.7504397};
  static const double wts[7] = {0.00054826885, 0.030757124, 0.24012586, 0.45714286,
                                0.24012586,    0.030757124, 0.00054826885};

  auto clamp_to_box = [&](Point x) {
    const auto& b = domain.bounds();
    for (int k = 0; k < d; ++k) x[k] = std::min(std::max(x[k], b[k].first), b[k].second);
    if (domain.kind() == DomainKind::Ball) {
      double len = euclidean_norm(x);
      if (len >= 1.0) x = scaled(x, (1.0 - 1e-9) / len);
    }
    return x;
  };

  for (double w : ws) {
    if (!(w > 0.0)) continue;
    auto smooth = [&, w](const Point& x) {
      double acc = 0.0;
      std::vector<int> idx(d, 0);
      for (;;) {
        double weight = 1.0;
        Point y = x;
        for (int k = 0; k < d; ++k) {
          weight *= wts[idx[k]];
          y[k] += w * nodes[idx[k]];
        }
        acc += weight * f(clamp_to_box(std::move(y)));
        int k = d - 1;
        while (k >= 0 && idx[k] == 6) idx[k--] = 0;
        if (k < 0) break;
        ++idx[k];
      }
      return acc;
    };
    TargetFunction g("mollified", d, smooth);
    double dist = norm_estimate([&](const Point& x) { return f(x) - g(x); }, plan);
    double semi = sobolev_seminorm(g, r, q, domain);  // finite-difference fallback
    double cand = dist + delta * semi;
    if (cand < best.value) {
      best.value = cand;
      best.best_width = w;
    }
  }
  return best;
}

}  // namespace ridgelab
