#include "ridgelab/shatter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace ridgelab {
namespace {

double fit_value(const NetworkParams& net, double a0, const Point& x) {
  return a0 + net_eval(net, x);
}

double min_margin(const NetworkParams& net, double a0, const std::vector<Point>& points,
                  const std::vector<int>& signs) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i)
    m = std::min(m, signs[i] * fit_value(net, a0, points[i]));
  return m;
}

struct AttemptResult {
  NetworkParams params;
  double a0 = 0.0;
  double margin = -std::numeric_limits<double>::infinity();
};

AttemptResult hinge_descent(int n, const Activation& sigma, const std::vector<Point>& points,
                            const std::vector<int>& signs, const ShatterConfig& cfg, int restart) {
  const int d = static_cast<int>(points[0].size());
  std::seed_seq seq{static_cast<unsigned>(cfg.seed), static_cast<unsigned>(restart), 0x5bd1e995u};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);

  NetworkParams net = NetworkParams::zero(n, d, sigma);
  for (Neuron& nrn : net.neurons) {
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (int j = 0; j < d; ++j) {
        nrn.weight[j] = gauss(rng);
        norm2 += nrn.weight[j] * nrn.weight[j];
      }
    } while (norm2 < 1e-12);
    double mag = std::exp(std::log(0.5) + (std::log(50.0) - std::log(0.5)) * unit(rng));
    for (int j = 0; j < d; ++j) nrn.weight[j] *= mag / std::sqrt(norm2);
    // Put the ridge hyperplane through one of the inputs, jittered.
    const Point& anchor = points[pick(rng)];
    nrn.bias = -dot(nrn.weight, anchor) + 0.2 * gauss(rng);
    nrn.outer = gauss(rng);
  }
  double a0 = cfg.constant_term ? gauss(rng) : 0.0;

  AttemptResult best;
  best.params = net;
  best.a0 = a0;
  best.margin = min_margin(net, a0, points, signs);

  const std::size_t P = static_cast<std::size_t>(n) * (2 + d) + (cfg.constant_term ? 1 : 0);
  std::vector<double> m(P, 0.0), v(P, 0.0), grad(P);
  const double b1 = 0.9, b2 = 0.999, eps = 1e-8;

  for (int t = 1; t <= cfg.iterations; ++t) {
    std::fill(grad.begin(), grad.end(), 0.0);
    for (std::size_t i = 0; i < points.size(); ++i) {
      double g = fit_value(net, a0, points[i]);
      if (signs[i] * g >= 1.0) continue;  // hinge satisfied at unit margin
      std::vector<double> pg = net_param_gradient(net, points[i]);
      for (std::size_t j = 0; j < pg.size(); ++j) grad[j] -= signs[i] * pg[j];
      if (cfg.constant_term) grad[P - 1] -= signs[i];
    }
    std::vector<double> x;
    x.reserve(P);
    for (const Neuron& nrn : net.neurons) {
      x.push_back(nrn.outer);
      x.push_back(nrn.bias);
      x.insert(x.end(), nrn.weight.begin(), nrn.weight.end());
    }
    if (cfg.constant_term) x.push_back(a0);
    for (std::size_t j = 0; j < P; ++j) {
      m[j] = b1 * m[j] + (1 - b1) * grad[j];
      v[j] = b2 * v[j] + (1 - b2) * grad[j] * grad[j];
      double mh = m[j] / (1 - std::pow(b1, t));
      double vh = v[j] / (1 - std::pow(b2, t));
      x[j] -= cfg.step_size * mh / (std::sqrt(vh) + eps);
      if (!std::isfinite(x[j])) x[j] = 0.0;
    }
    std::size_t idx = 0;
    for (Neuron& nrn : net.neurons) {
      nrn.outer = x[idx++];
      nrn.bias = x[idx++];
      for (int j = 0; j < d; ++j) nrn.weight[j] = x[idx++];
    }
    if (cfg.constant_term) a0 = x[P - 1];

    double margin = min_margin(net, a0, points, signs);
    if (margin > best.margin) {
      best.margin = margin;
      best.params = net;
      best.a0 = a0;
    }
    if (margin >= 1.0) break;
  }
  return best;
}

AttemptResult best_attempt(int n, const Activation& sigma, const std::vector<Point>& points,
                           const std::vector<int>& signs, const ShatterConfig& cfg,
                           std::vector<double>* margins) {
  AttemptResult best;
  for (int r = 0; r < std::max(1, cfg.restarts); ++r) {
    AttemptResult a = hinge_descent(n, sigma, points, signs, cfg, r);
    if (margins) margins->push_back(a.margin);
    if (a.margin > best.margin) best = a;
    if (best.margin >= 1.0) break;
  }
  return best;
}

}  // namespace

ShatterFitResult shatter_fit(int n, const Activation& sigma, const std::vector<Point>& points,
                             const std::vector<int>& signs, const ShatterConfig& cfg) {
  if (points.empty() || points.size() != signs.size())
    throw std::invalid_argument("shatter_fit: one sign per point required");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw std::invalid_argument("shatter_fit: points must be distinct");

  AttemptResult best = best_attempt(n, sigma, points, signs, cfg, nullptr);

  ShatterFitResult out;
  out.params = best.params;
  out.constant = best.a0;
  out.margin = best.margin;
  if (best.margin > 1e-9) {
    // The margin scales linearly with the outer layer, so any strict fit
    // reaches the target after rescaling.
    double scale = std::max(1.0, 1.05 * cfg.margin_target / best.margin);
    for (Neuron& nrn : out.params.neurons) nrn.outer *= scale;
    out.constant *= scale;
    out.margin = min_margin(out.params, out.constant, points, signs);
    out.fit = out.margin >= cfg.margin_target;
  }
  return out;
}

DenseSignScan dense_grid_sign_scan(const Activation& sigma, const std::vector<double>& xs,
                                   const std::vector<int>& signs, double param_range,
                                   int steps_per_axis) {
  if (xs.size() != signs.size() || xs.empty())
    throw std::invalid_argument("dense_grid_sign_scan: one sign per point required");
  const int S = steps_per_axis;
  const double R = param_range;
  auto tick = [&](int t) { return -R + 2.0 * R * t / (S - 1); };

  DenseSignScan scan;
  scan.best_margin = -std::numeric_limits<double>::infinity();
  std::vector<double> feat(xs.size());
  for (int iw = 0; iw < S; ++iw) {
    double w = tick(iw);
    for (int ic = 0; ic < S; ++ic) {
      double c = tick(ic);
      for (std::size_t i = 0; i < xs.size(); ++i) feat[i] = sigma.eval(0, w * xs[i] + c);
      for (int ia = 0; ia < S; ++ia) {
        double a = tick(ia);
        double margin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < xs.size(); ++i)
          margin = std::min(margin, signs[i] * a * feat[i]);
        if (margin > scan.best_margin) {
          scan.best_margin = margin;
          scan.a = a;
          scan.w = w;
          scan.c = c;
          scan.found = margin > 0.0;
        }
      }
    }
  }
  return scan;
}

UnshatterableSearch find_unshatterable_signs(int n, const Activation& sigma, const GridSpec& grid,
                                             const ShatterConfig& cfg) {
  std::vector<Point> points = grid_points(grid);
  const std::size_t m = points.size();
  UnshatterableSearch search;

  // A single neuron in d = 1 is monotone in x for every supported activation,
  // so it realizes at most one sign change; alternating signs on >= 3 points
  // cannot be matched, constant offset or not.
  if (n == 1 && grid.domain.dimension() == 1 && m >= 3) {
    std::vector<int> alt(m);
    for (std::size_t i = 0; i < m; ++i) alt[i] = i % 2 == 0 ? 1 : -1;
    search.result = SignedGrid{grid, alt};
    search.proven = true;
    return search;
  }

  auto try_signs = [&](const std::vector<int>& signs) -> bool {
    std::vector<double> margins;
    AttemptResult best = best_attempt(n, sigma, points, signs, cfg, &margins);
    ++search.assignments_tried;
    if (best.margin <= 1e-9) {
      search.result = SignedGrid{grid, signs};
      search.failure_margins = margins;
      return true;
    }
    return false;
  };

  if (m <= 20) {
    for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
      std::vector<int> signs(m);
      for (std::size_t i = 0; i < m; ++i) signs[i] = (mask >> i) & 1ull ? 1 : -1;
      if (try_signs(signs)) return search;
    }
  } else {
    std::mt19937_64 rng(cfg.seed);
    std::bernoulli_distribution flip(0.5);
    for (long t = 0; t < cfg.max_assignments; ++t) {
      std::vector<int> signs(m);
      for (std::size_t i = 0; i < m; ++i) signs[i] = flip(rng) ? 1 : -1;
      if (try_signs(signs)) return search;
    }
  }
  return search;
}

}  // namespace ridgelab
