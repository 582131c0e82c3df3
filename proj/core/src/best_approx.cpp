#include "ridgelab/best_approx.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "ridgelab/minimax_lp.hpp"

namespace ridgelab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Workspace {
  SamplePlan plan;
  std::vector<double> fvals;
  double p = kSupNorm;
};

Workspace make_workspace(const TargetFunction& f, double p, const Domain& domain,
                         const SolverConfig& cfg) {
  Workspace ws;
  ws.p = p;
  ws.plan = make_sample_plan(domain, NormQuery{p, cfg.sampling});
  ws.fvals.resize(ws.plan.points.size());
  for (std::size_t i = 0; i < ws.plan.points.size(); ++i) ws.fvals[i] = f(ws.plan.points[i]);
  return ws;
}

double score(const NetworkParams& net, const Workspace& ws) {
  if (std::isinf(ws.p)) {
    double m = 0.0;
    for (std::size_t i = 0; i < ws.plan.points.size(); ++i)
      m = std::max(m, std::abs(net_eval(net, ws.plan.points[i]) - ws.fvals[i]));
    return m;
  }
  double s = 0.0;
  for (std::size_t i = 0; i < ws.plan.points.size(); ++i)
    s += ws.plan.weight * std::pow(std::abs(net_eval(net, ws.plan.points[i]) - ws.fvals[i]), ws.p);
  return std::pow(s, 1.0 / ws.p);
}

// Replaces the outer weights with the exact optimum given fixed (w, c):
// minimax LP for the sup norm, least squares otherwise. Keeps the old
// weights when the subproblem is degenerate.
void refit_outer(NetworkParams& net, const Workspace& ws) {
  const std::size_t N = ws.plan.points.size();
  const int n = net.width();
  if (N < static_cast<std::size_t>(n)) return;
  std::vector<std::vector<double>> rows(N, std::vector<double>(n));
  for (std::size_t i = 0; i < N; ++i)
    for (int k = 0; k < n; ++k) {
      double z = dot(net.neurons[k].weight, ws.plan.points[i]) + net.neurons[k].bias;
      double v = net.activation.eval(0, z);
      if (!std::isfinite(v)) return;
      rows[i][k] = v;
    }
  std::vector<double> a;
  if (std::isinf(ws.p)) {
    // Degenerate bases (duplicate or vanishing features) abort the LP; the
    // old outer weights are simply kept in that case.
    try {
      MinimaxFit fit = chebyshev_fit(rows, ws.fvals);
      if (!fit.converged) return;
      a = fit.coefficients;
    } catch (const std::exception&) {
      return;
    }
  } else {
    Eigen::MatrixXd A(N, n);
    Eigen::VectorXd b(N);
    for (std::size_t i = 0; i < N; ++i) {
      b(i) = ws.fvals[i];
      for (int k = 0; k < n; ++k) A(i, k) = rows[i][k];
    }
    Eigen::VectorXd c = A.colPivHouseholderQr().solve(b);
    a.assign(c.data(), c.data() + c.size());
  }
  for (int k = 0; k < n; ++k)
    if (!std::isfinite(a[k])) return;
  NetworkParams trial = net;
  for (int k = 0; k < n; ++k) trial.neurons[k].outer = a[k];
  if (score(trial, ws) <= score(net, ws)) net = trial;
}

std::vector<double> flatten(const NetworkParams& net) {
  const int d = net.dimension();
  std::vector<double> x;
  x.reserve(net.neurons.size() * (2 + d));
  for (const Neuron& nrn : net.neurons) {
    x.push_back(nrn.outer);
    x.push_back(nrn.bias);
    x.insert(x.end(), nrn.weight.begin(), nrn.weight.end());
  }
  return x;
}

void unflatten(const std::vector<double>& x, NetworkParams& net) {
  const int d = net.dimension();
  std::size_t i = 0;
  for (Neuron& nrn : net.neurons) {
    nrn.outer = x[i++];
    nrn.bias = x[i++];
    for (int j = 0; j < d; ++j) nrn.weight[j] = x[i++];
  }
}

// Objective and gradient in flattened coordinates. temperature > 0 selects
// the normalized log-sum-exp surrogate (always <= the exact sampled max);
// temperature <= 0 selects mean |r|^p.
double objective_gradient(const NetworkParams& net, const Workspace& ws, double temperature,
                          std::vector<double>& grad) {
  const std::size_t N = ws.plan.points.size();
  std::vector<double> r(N);
  for (std::size_t i = 0; i < N; ++i) r[i] = net_eval(net, ws.plan.points[i]) - ws.fvals[i];
  std::fill(grad.begin(), grad.end(), 0.0);

  std::vector<double> lambda(N);
  double value;
  if (temperature > 0.0) {
    double s = 0.0;
    for (double ri : r) s = std::max(s, std::abs(ri));
    double den = 0.0;
    for (double ri : r) den += std::exp((std::abs(ri) - s) / temperature);
    value = s + temperature * std::log(den / static_cast<double>(N));
    for (std::size_t i = 0; i < N; ++i) {
      double w = std::exp((std::abs(r[i]) - s) / temperature) / den;
      lambda[i] = w * (r[i] >= 0.0 ? 1.0 : -1.0);
    }
  } else {
    double s = 0.0;
    for (double ri : r) s += std::pow(std::abs(ri), ws.p);
    value = s / static_cast<double>(N);
    for (std::size_t i = 0; i < N; ++i) {
      double m = ws.p * std::pow(std::abs(r[i]), ws.p - 1.0) / static_cast<double>(N);
      lambda[i] = m * (r[i] >= 0.0 ? 1.0 : -1.0);
    }
  }
  for (std::size_t i = 0; i < N; ++i) {
    if (lambda[i] == 0.0) continue;
    std::vector<double> g = net_param_gradient(net, ws.plan.points[i]);
    for (std::size_t j = 0; j < g.size(); ++j) grad[j] += lambda[i] * g[j];
  }
  return value;
}

void clamp_params(std::vector<double>& x) {
  for (double& v : x) {
    if (!std::isfinite(v)) continue;  // caught by the objective check
    v = std::clamp(v, -1e6, 1e6);
  }
}

struct RestartOutcome {
  NetworkParams params;
  double error = kInf;
  long iterations = 0;
  bool diverged = false;
};

// Keeps the best exactly-scored parameters seen at any checkpoint, so a bad
// late stage can never worsen a restart's report.
struct BestTracker {
  NetworkParams params;
  double error = kInf;
  void offer(const NetworkParams& net, const Workspace& ws) {
    double e = score(net, ws);
    if (std::isfinite(e) && e < error) {
      error = e;
      params = net;
    }
  }
};

void adam_stage(NetworkParams& net, const Workspace& ws, double temperature, int iterations,
                double lr, BestTracker& best, long& iters_used, bool& nonfinite) {
  const std::size_t P = net.neurons.size() * (2 + net.dimension());
  std::vector<double> x = flatten(net), grad(P), m(P, 0.0), v(P, 0.0);
  const double b1 = 0.9, b2 = 0.999, eps = 1e-8;
  for (int t = 1; t <= iterations; ++t) {
    double val = objective_gradient(net, ws, temperature, grad);
    if (!std::isfinite(val)) {
      nonfinite = true;
      return;
    }
    for (std::size_t j = 0; j < P; ++j) {
      m[j] = b1 * m[j] + (1 - b1) * grad[j];
      v[j] = b2 * v[j] + (1 - b2) * grad[j] * grad[j];
      double mh = m[j] / (1 - std::pow(b1, t));
      double vh = v[j] / (1 - std::pow(b2, t));
      x[j] -= lr * mh / (std::sqrt(vh) + eps);
    }
    clamp_params(x);
    unflatten(x, net);
    ++iters_used;
    if (t % 25 == 0) best.offer(net, ws);
  }
  best.offer(net, ws);
}

NetworkParams random_init(int n, int d, const Activation& sigma, const Domain& domain,
                          const SolverConfig& cfg, std::mt19937_64& rng) {
  NetworkParams net = NetworkParams::zero(n, d, sigma);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double log_lo = std::log(cfg.weight_norm_min), log_hi = std::log(cfg.weight_norm_max);
  for (Neuron& nrn : net.neurons) {
    Point dir(d);
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (int j = 0; j < d; ++j) {
        dir[j] = gauss(rng);
        norm2 += dir[j] * dir[j];
      }
    } while (norm2 < 1e-12);
    double mag = std::exp(log_lo + (log_hi - log_lo) * unit(rng)) / std::sqrt(norm2);
    for (int j = 0; j < d; ++j) nrn.weight[j] = dir[j] * mag;
    // Anchor the hyperplane w.x + c = 0 at a point inside the domain box.
    Point x0(d);
    for (int j = 0; j < d; ++j) {
      const auto& b = domain.bounds()[j];
      x0[j] = b.first + (b.second - b.first) * unit(rng);
    }
    nrn.bias = -dot(nrn.weight, x0);
    nrn.outer = cfg.outer_scale * gauss(rng);
  }
  return net;
}

// d = 1 structured starts: a staircase of steep ridges at interior knots, and
// a fan with every knot at the domain center and alternating slopes.
NetworkParams staircase_init(int n, const Activation& sigma, const Domain& domain) {
  NetworkParams net = NetworkParams::zero(n, 1, sigma);
  const double lo = domain.bounds()[0].first, hi = domain.bounds()[0].second, L = hi - lo;
  const bool smooth = sigma.infinitely_smooth();
  for (int i = 0; i < n; ++i) {
    double knot = lo + (i + 1) * L / (n + 1);
    double w = smooth ? 4.0 * (n + 1) / L : (i % 2 == 0 ? 1.0 : -1.0);
    net.neurons[i].weight[0] = w;
    net.neurons[i].bias = -w * knot;
    net.neurons[i].outer = 0.0;
  }
  return net;
}

NetworkParams fan_init(int n, const Activation& sigma, const Domain& domain) {
  NetworkParams net = NetworkParams::zero(n, 1, sigma);
  const double lo = domain.bounds()[0].first, hi = domain.bounds()[0].second;
  const double mid = 0.5 * (lo + hi);
  const double slope = sigma.infinitely_smooth() ? 8.0 / (hi - lo) : 1.0;
  for (int i = 0; i < n; ++i) {
    double w = (i % 2 == 0 ? slope : -slope) * (1 + i / 2);
    net.neurons[i].weight[0] = w;
    net.neurons[i].bias = -w * mid;
  }
  return net;
}

NetworkParams padded_to_width(const NetworkParams& src, int n, int d, const Activation& sigma) {
  NetworkParams net = NetworkParams::zero(n, d, sigma);
  for (int i = 0; i < std::min<int>(n, src.width()); ++i) net.neurons[i] = src.neurons[i];
  return net;
}

double nelder_mead(const std::function<double(const std::vector<double>&)>& obj,
                   std::vector<double>& x, int max_iter) {
  const std::size_t P = x.size();
  std::vector<std::vector<double>> simplex(P + 1, x);
  std::vector<double> fv(P + 1);
  for (std::size_t i = 0; i < P; ++i) simplex[i + 1][i] += 0.05 * (1.0 + std::abs(x[i]));
  for (std::size_t i = 0; i <= P; ++i) fv[i] = obj(simplex[i]);

  auto order = [&] {
    std::vector<std::size_t> idx(P + 1);
    for (std::size_t i = 0; i <= P; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> s2(P + 1);
    std::vector<double> f2(P + 1);
    for (std::size_t i = 0; i <= P; ++i) {
      s2[i] = simplex[idx[i]];
      f2[i] = fv[idx[i]];
    }
    simplex.swap(s2);
    fv.swap(f2);
  };

  for (int it = 0; it < max_iter; ++it) {
    order();
    if (fv[P] - fv[0] < 1e-14 * (1.0 + std::abs(fv[0]))) break;
    std::vector<double> centroid(P, 0.0);
    for (std::size_t i = 0; i < P; ++i)
      for (std::size_t j = 0; j < P; ++j) centroid[j] += simplex[i][j] / static_cast<double>(P);
    auto blend = [&](double t) {
      std::vector<double> y(P);
      for (std::size_t j = 0; j < P; ++j) y[j] = centroid[j] + t * (simplex[P][j] - centroid[j]);
      return y;
    };
    std::vector<double> xr = blend(-1.0);
    double fr = obj(xr);
    if (fr < fv[0]) {
      std::vector<double> xe = blend(-2.0);
      double fe = obj(xe);
      if (fe < fr) {
        simplex[P] = xe;
        fv[P] = fe;
      } else {
        simplex[P] = xr;
        fv[P] = fr;
      }
    } else if (fr < fv[P - 1]) {
      simplex[P] = xr;
      fv[P] = fr;
    } else {
      std::vector<double> xc = blend(fr < fv[P] ? -0.5 : 0.5);
      double fc = obj(xc);
      if (fc < std::min(fr, fv[P])) {
        simplex[P] = xc;
        fv[P] = fc;
      } else {
        for (std::size_t i = 1; i <= P; ++i) {
          for (std::size_t j = 0; j < P; ++j)
            simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
          fv[i] = obj(simplex[i]);
        }
      }
    }
  }
  order();
  x = simplex[0];
  return fv[0];
}

RestartOutcome run_restart(int ri, const TargetFunction& f, int n, const Activation& sigma,
                           const Domain& domain, const SolverConfig& cfg, const Workspace& ws) {
  const int d = f.dimension();
  std::seed_seq seq{static_cast<unsigned>(cfg.seed), static_cast<unsigned>(ri), 0x9e3779b9u};
  std::mt19937_64 rng(seq);

  NetworkParams net;
  if (ri == 0) {
    net = NetworkParams::zero(n, d, sigma);
  } else if (ri == 1 && cfg.warm_start) {
    net = padded_to_width(*cfg.warm_start, n, d, sigma);
  } else if (d == 1 && ri == 2) {
    net = staircase_init(n, sigma, domain);
  } else if (d == 1 && ri == 3) {
    net = fan_init(n, sigma, domain);
  } else {
    net = random_init(n, d, sigma, domain, cfg, rng);
  }

  RestartOutcome out;
  BestTracker best;
  best.offer(net, ws);
  refit_outer(net, ws);
  best.offer(net, ws);

  bool nonfinite = false;
  const bool sup = std::isinf(ws.p);
  const std::size_t stages = std::max<std::size_t>(1, cfg.temperatures.size());
  for (std::size_t s = 0; s < stages && !nonfinite; ++s) {
    double temperature = sup && s < cfg.temperatures.size() ? cfg.temperatures[s] : -1.0;
    if (sup && temperature <= 0.0) temperature = 0.01;
    double lr = cfg.step_size * std::pow(cfg.step_decay, static_cast<double>(s));
    adam_stage(net, ws, temperature, cfg.iterations, lr, best, out.iterations, nonfinite);
    refit_outer(net, ws);
    best.offer(net, ws);
    if (best.error <= cfg.tolerance) break;
  }

  out.diverged = !std::isfinite(best.error);
  out.error = best.error;
  out.params = best.params;
  return out;
}

}  // namespace

BestApproxResult best_approx(const TargetFunction& f, int n, const Activation& sigma, double p,
                             const Domain& domain, const SolverConfig& cfg) {
  if (n < 1) throw std::invalid_argument("best_approx: n must be positive");
  Workspace ws = make_workspace(f, p, domain, cfg);

  const int restarts = std::max(1, cfg.restarts);
  std::vector<RestartOutcome> outcomes(restarts);
  int jobs = cfg.jobs > 0 ? cfg.jobs : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::clamp(jobs, 1, restarts);

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int ri = next.fetch_add(1); ri < restarts; ri = next.fetch_add(1))
      outcomes[ri] = run_restart(ri, f, n, sigma, domain, cfg, ws);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  BestApproxResult result;
  result.restart_errors.resize(restarts);
  for (int ri = 0; ri < restarts; ++ri) {
    result.restart_errors[ri] = outcomes[ri].error;
    result.iterations_used += outcomes[ri].iterations;
    if (outcomes[ri].diverged) ++result.diverged_restarts;
    if (outcomes[ri].error < (result.best_restart < 0 ? kInf : result.error)) {
      result.error = outcomes[ri].error;
      result.best_restart = ri;
    }
  }
  if (result.best_restart < 0 || !std::isfinite(result.error))
    throw std::runtime_error("best_approx: non-finite-objective in every restart");
  result.params = outcomes[result.best_restart].params;

  const std::size_t P = result.params.neurons.size() * (2 + f.dimension());
  if (P > 0 && P <= 18 && result.error > cfg.tolerance) {
    NetworkParams trial = result.params;
    std::vector<double> x = flatten(trial);
    auto obj = [&](const std::vector<double>& y) {
      unflatten(y, trial);
      double e = score(trial, ws);
      return std::isfinite(e) ? e : kInf;
    };
    double polished = nelder_mead(obj, x, 400 * static_cast<int>(P));
    if (polished < result.error) {
      unflatten(x, trial);
      refit_outer(trial, ws);
      double e = score(trial, ws);
      if (e < result.error) {
        result.error = e;
        result.params = trial;
        result.polished = true;
      }
    }
  }
  return result;
}

std::vector<BestApproxResult> best_approx_chain(const TargetFunction& f,
                                                const std::vector<int>& widths,
                                                const Activation& sigma, double p,
                                                const Domain& domain, const SolverConfig& cfg) {
  std::vector<BestApproxResult> out;
  SolverConfig local = cfg;
  for (std::size_t i = 0; i < widths.size(); ++i) {
    if (i > 0 && widths[i] < widths[i - 1])
      throw std::invalid_argument("best_approx_chain: widths must be non-decreasing");
    BestApproxResult r = best_approx(f, widths[i], sigma, p, domain, local);
    if (i > 0 && out.back().error < r.error) {
      // The padded previous solution was a restart, so this can only happen
      // through scoring ties; keep the smaller report.
      r.error = out.back().error;
      r.params = padded_to_width(out.back().params, widths[i], f.dimension(), sigma);
    }
    local.warm_start = r.params;
    out.push_back(std::move(r));
  }
  return out;
}

double dense_grid_lower_bound(const TargetFunction& f, const Activation& sigma,
                              const Domain& domain, double param_range, int steps_per_axis,
                              int resolution) {
  if (f.dimension() != 1)
    throw std::invalid_argument("dense_grid_lower_bound: only d = 1 is supported");
  if (steps_per_axis < 2) throw std::invalid_argument("dense_grid_lower_bound: need >= 2 steps");
  SamplePlan plan = make_sample_plan(domain, NormQuery{kSupNorm, TensorGridSampling{resolution}});
  const std::size_t N = plan.points.size();
  std::vector<double> xs(N), fv(N);
  for (std::size_t i = 0; i < N; ++i) {
    xs[i] = plan.points[i][0];
    fv[i] = f(plan.points[i]);
  }

  const double R = param_range;
  const int S = steps_per_axis;
  auto tick = [&](int t) { return -R + 2.0 * R * t / (S - 1); };

  double best = kInf;
  std::vector<double> feat(N);
  for (int iw = 0; iw < S; ++iw) {
    double w = tick(iw);
    for (int ic = 0; ic < S; ++ic) {
      double c = tick(ic);
      for (std::size_t i = 0; i < N; ++i) feat[i] = sigma.eval(0, w * xs[i] + c);
      for (int ia = 0; ia < S; ++ia) {
        double a = tick(ia);
        double m = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
          m = std::max(m, std::abs(a * feat[i] - fv[i]));
          if (m >= best) break;
        }
        best = std::min(best, m);
      }
    }
  }
  return best;
}

RemainderAxiomReport check_remainder_axioms(const std::vector<TargetFunction>& fs,
                                            const std::vector<int>& widths,
                                            const Activation& sigma, double p,
                                            const Domain& domain, const SolverConfig& cfg,
                                            double slack) {
  RemainderAxiomReport report;
  report.slack = slack;
  auto add = [&](const std::string& axiom, const std::string& instance, double lhs, double rhs,
                 bool ok) {
    report.checks.push_back(AxiomCheck{axiom, instance, lhs, rhs, ok});
  };

  std::vector<std::vector<BestApproxResult>> chains;
  for (const TargetFunction& f : fs) {
    Workspace ws = make_workspace(f, p, domain, cfg);
    std::vector<BestApproxResult> chain = best_approx_chain(f, widths, sigma, p, domain, cfg);
    double fnorm = 0.0;
    if (std::isinf(p)) {
      for (double v : ws.fvals) fnorm = std::max(fnorm, std::abs(v));
    } else {
      for (double v : ws.fvals) fnorm += ws.plan.weight * std::pow(std::abs(v), p);
      fnorm = std::pow(fnorm, 1.0 / p);
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      add("monotonicity", f.label() + " n=" + std::to_string(widths[i]) + "->" +
              std::to_string(widths[i + 1]),
          chain[i + 1].error, chain[i].error, chain[i + 1].error <= chain[i].error + 1e-12);
    for (std::size_t i = 0; i < chain.size(); ++i)
      add("stability", f.label() + " n=" + std::to_string(widths[i]), chain[i].error, fnorm,
          chain[i].error <= fnorm + 1e-12);

    // Homogeneity, c = 2: scaling the found outer weights certifies
    // E_n(2f) <= 2 E_n(f) on the same sample set.
    const double c = 2.0;
    TargetFunction f2 = f.scaled_by(c);
    Workspace ws2 = make_workspace(f2, p, domain, cfg);
    NetworkParams scaled = chain.back().params;
    for (Neuron& nrn : scaled.neurons) nrn.outer *= c;
    double constructed = score(scaled, ws2);
    add("homogeneity", f.label() + " scale-construction c=2", constructed,
        c * chain.back().error,
        std::abs(constructed - c * chain.back().error) <= 1e-9 * (1.0 + c * chain.back().error));
    BestApproxResult r2 = best_approx(f2, widths.back(), sigma, p, domain, cfg);
    add("homogeneity", f.label() + " resolve c=2", r2.error, c * chain.back().error,
        r2.error <= c * chain.back().error * (1.0 + slack) + 1e-12);
    chains.push_back(std::move(chain));
  }

  if (fs.size() >= 2) {
    TargetFunction sum = fs[0].plus(fs[1]);
    Workspace wsum = make_workspace(sum, p, domain, cfg);
    NetworkParams joint = chains[0].back().params;
    for (const Neuron& nrn : chains[1].back().params.neurons) joint.neurons.push_back(nrn);
    double joint_err = score(joint, wsum);
    double rhs = chains[0].back().error + chains[1].back().error;
    add("subadditivity", fs[0].label() + "+" + fs[1].label(), joint_err, rhs,
        joint_err <= rhs + 1e-9 * (1.0 + rhs));
  }

  report.all_ok = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const AxiomCheck& c) { return c.ok; });
  return report;
}

}  // namespace ridgelab
