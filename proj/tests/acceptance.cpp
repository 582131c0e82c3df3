// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ridgelab/best_approx.hpp"
#include "ridgelab/catalog.hpp"
#include "ridgelab/experiments.hpp"
#include "ridgelab/gliding_hump.hpp"
#include "ridgelab/grid.hpp"
#include "ridgelab/poly_approx.hpp"
#include "ridgelab/poly_network.hpp"
#include "ridgelab/rate_fit.hpp"
#include "ridgelab/report.hpp"
#include "ridgelab/resonance.hpp"
#include "ridgelab/ridge.hpp"
#include "ridgelab/shatter.hpp"
#include "ridgelab/smoothness.hpp"
#include "ridgelab/vc_chain.hpp"

using namespace ridgelab;

namespace {

int g_failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& measured) {
  std::printf("[%s] %2d %s (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), measured.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double scalar_of(const ExperimentReport& r, const std::string& key, double fallback) {
  for (const auto& [k, v] : r.scalars)
    if (k == key) return v;
  return fallback;
}

// --- 1: inequality chain, exact arithmetic --------------------------------
void criterion_1() {
  auto good = verify_corsharp_chain(1.0, 64.0, 2, 1000000, 1);
  auto bad = verify_corsharp_chain(1.0, 2.0, 2, 1000, 1);
  bool ok = good.premise_ok && good.pass && good.failures == 0 && !bad.premise_ok && !bad.pass;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "E=64: premise %.0f<%.0f failures=%lld; E=2: premise_lhs=%.0f>=2",
                good.premise_lhs, good.premise_rhs, good.failures, bad.premise_lhs);
  report(1, ok, "inequality chain holds for E=64 on [2,1e6] and the E=2 premise fails", buf);
}

// --- 2: resonance functions hit their signs exactly -----------------------
void criterion_2() {
  bool ok = true;
  double worst_defect = 0.0, worst_sup_low = 1.0, worst_sup_high = 0.0;
  std::mt19937 rng(123);
  for (int d = 1; d <= 2 && ok; ++d) {
    for (int tau = 1; tau <= 16; ++tau) {
      GridSpec grid{Domain::unit_cube(d), tau};
      auto pts = grid_points(grid);
      for (int pattern = 0; pattern < 2; ++pattern) {
        std::vector<int> signs(pts.size());
        for (std::size_t i = 0; i < signs.size(); ++i)
          signs[i] = pattern == 0 ? (i % 2 == 0 ? 1 : -1) : ((rng() & 1u) ? 1 : -1);
        ResonanceFunction h(SignedGrid{grid, signs});
        double sup = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
          worst_defect = std::max(worst_defect, std::abs(h.eval(pts[i]) - signs[i]));
          sup = std::max(sup, std::abs(h.eval(pts[i])));
        }
        int res = d == 1 ? 257 : 65;
        for (const Point& x : grid_points(GridSpec{grid.domain, res - 1}))
          sup = std::max(sup, std::abs(h.eval(x)));
        worst_sup_low = std::min(worst_sup_low, sup);
        worst_sup_high = std::max(worst_sup_high, sup);
      }
    }
  }
  ok = worst_defect == 0.0 && worst_sup_low >= 1.0 - 1e-12 && worst_sup_high <= 1.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "max grid defect=%g, sampled sup in [%.15f, %.15f]",
                worst_defect, worst_sup_low, worst_sup_high);
  report(2, ok, "resonance builders are exact for all tau <= 16, d <= 2", buf);
}

// --- 3: (+,-,+) defeats one logistic ridge but not two --------------------
void criterion_3() {
  auto scan = dense_grid_sign_scan(Activation::logistic(), {0.2, 0.5, 0.8}, {1, -1, 1}, 50.0, 101);
  ShatterConfig cfg;
  cfg.restarts = 16;
  cfg.iterations = 300;
  auto fit2 = shatter_fit(2, Activation::logistic(), {{0.2}, {0.5}, {0.8}}, {1, -1, 1}, cfg);
  bool ok = !scan.found && fit2.fit && fit2.margin >= 0.1;
  char buf[160];
  std::snprintf(buf, sizeof buf, "dense scan found=%d best_margin=%.4f; n=2 margin=%.4f",
                scan.found ? 1 : 0, scan.best_margin, fit2.margin);
  report(3, ok, "101^3 grid finds no n=1 sign fit for (+,-,+); n=2 fits at margin >= 0.1", buf);
}

// --- 4: the same sign pattern forces error >= 0.9 for width 1 -------------
void criterion_4() {
  SignedGrid sg{GridSpec{Domain::unit_cube(1), 2}, {1, -1, 1}};
  ResonanceFunction h(sg);
  SolverConfig cfg;
  cfg.restarts = 64;
  cfg.seed = 1;
  auto res = best_approx(h.as_target(), 1, Activation::logistic(), kSupNorm,
                         Domain::unit_cube(1), cfg);
  bool ok = res.error >= 0.9;
  char buf[96];
  std::snprintf(buf, sizeof buf, "error=%.6f over %d restarts", res.error, cfg.restarts);
  report(4, ok, "width-1 logistic error against the resonance target stays >= 0.9", buf);
}

// --- 5: |x - 1/2| with relu: exact at n=2, bounded below at n=1 -----------
void criterion_5() {
  const auto& entry = catalog_lookup("abs-kink");
  SolverConfig cfg;
  cfg.seed = 1;
  auto res = best_approx(entry.fn, 2, Activation::relu_power(1), kSupNorm, entry.domain, cfg);
  double lower = dense_grid_lower_bound(entry.fn, Activation::relu_power(1), entry.domain);
  bool ok = res.error <= 1e-4 && lower >= 0.05;
  char buf[96];
  std::snprintf(buf, sizeof buf, "n=2 error=%.3g, n=1 grid lower bound=%.4f", res.error, lower);
  report(5, ok, "relu kink: n=2 error <= 1e-4 and n=1 dense lower bound >= 0.05", buf);
}

// --- 6: classical equioscillation value ------------------------------------
void criterion_6() {
  TargetFunction f("x^2", 1, [](const Point& x) { return x[0] * x[0]; });
  auto fit = poly_best_approx(f, 1, NormQuery{kSupNorm, TensorGridSampling{257}},
                              Domain::unit_cube(1));
  bool ok = std::abs(fit.error - 0.125) <= 1e-3;
  char buf[64];
  std::snprintf(buf, sizeof buf, "error=%.6f vs 0.125", fit.error);
  report(6, ok, "degree-1 sup-norm fit of x^2 on (0,1) hits 1/8", buf);
}

// --- 7: ridge decomposition round trip -------------------------------------
void criterion_7() {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    int k = 1 + static_cast<int>(rng() % 4);
    std::vector<double> c(static_cast<std::size_t>(dim_poly_space(2, k)));
    for (double& v : c) v = coef(rng);
    Polynomial q(2, k, c);
    RidgeForm form = poly_to_ridge(q, ridge_directions(2, k).directions);
    for (int i = 0; i < 10; ++i) {
      Point x{coef(rng), coef(rng)};
      worst = std::max(worst, std::abs(form.eval(x) - q.eval(x)));
    }
  }
  bool ok = worst < 1e-8;
  char buf[64];
  std::snprintf(buf, sizeof buf, "max residual=%.3g", worst);
  report(7, ok, "100 random d=2 polynomials round-trip through ridge form", buf);
}

// --- 8: realizing x and x^2 by probing the activation ----------------------
void criterion_8() {
  Domain S = Domain::box({{-1.0, 1.0}});
  Polynomial line(1, 1);
  line.coefficient({1}) = 1.0;
  Polynomial square(1, 2);
  square.coefficient({2}) = 1.0;
  auto r1 = poly_by_network(line, Activation::logistic(), 2, 1e-4, S);
  auto r2 = poly_by_network(square, Activation::logistic(), 3, 1e-3, S);
  bool ok = r1.achieved_error <= 1e-4 && r2.achieved_error <= 1e-3;
  char buf[96];
  std::snprintf(buf, sizeof buf, "x: error=%.3g (2 neurons), x^2: error=%.3g (3 neurons)",
                r1.achieved_error, r2.achieved_error);
  report(8, ok, "logistic networks realize x and x^2 on [-1,1] within budget", buf);
}

// --- 9: modulus properties across the catalog -------------------------------
void criterion_9() {
  const double slack = 1.01;
  const std::vector<double> deltas = {0.5, 0.25, 0.125, 0.0625};
  bool ok = true;
  std::string offender;
  for (const auto& entry : function_catalog()) {
    const int d = entry.fn.dimension();
    NormQuery nq{kSupNorm, TensorGridSampling{d == 1 ? 129 : 33}};
    auto dirs_for = [&](double) {
      return d == 1 ? std::variant<AxisDirections, RandomDirections, ExplicitDirections>(
                          AxisDirections{})
                    : std::variant<AxisDirections, RandomDirections, ExplicitDirections>(
                          RandomDirections{8, 7});
    };
    double prev = -1.0;
    bool entry_ok = true;
    for (double delta : deltas) {
      double w1 = modulus(entry.fn, ModulusQuery{1, delta, nq, dirs_for(delta)}, entry.domain).value;
      double w2 = modulus(entry.fn, ModulusQuery{2, delta, nq, dirs_for(delta)}, entry.domain).value;
      double w1x2 =
          modulus(entry.fn.scaled_by(2.0), ModulusQuery{1, delta, nq, dirs_for(delta)}, entry.domain)
              .value;
      if (prev >= 0.0 && w1 > prev * slack) entry_ok = false;        // monotone as delta shrinks
      if (std::abs(w1x2 - 2.0 * w1) > slack * 1e-2 * std::max(1.0, w1)) entry_ok = false;
      if (w2 > 2.0 * w1 * slack + 1e-12) entry_ok = false;           // omega_2 <= 2 omega_1
      prev = w1;
    }
    double semi = sobolev_seminorm(entry.fn, 1, nq, entry.domain);
    for (double delta : deltas) {
      double w1 = modulus(entry.fn, ModulusQuery{1, delta, nq, dirs_for(delta)}, entry.domain).value;
      if (semi <= 1e-12) {
        if (w1 > 1e-12) entry_ok = false;  // constants move nowhere
      } else if (d == 1 && w1 > slack * delta * semi) {
        entry_ok = false;  // one-direction mean value bound
      } else if (d > 1 && w1 > slack * delta * semi * std::sqrt(2.0)) {
        entry_ok = false;  // |v| <= delta against the summed seminorm
      }
    }
    if (!entry_ok) {
      ok = false;
      offender += (offender.empty() ? "" : ",") + entry.id;
    }
  }
  report(9, ok, "20-function corpus: monotone, homogeneous, order chain, derivative bound",
         ok ? "all entries within 1% slack" : "violations: " + offender);
}

// --- 10: direct bound trend for the kink ------------------------------------
void criterion_10() {
  const auto& entry = catalog_lookup("abs-kink");
  SolverConfig cfg;
  cfg.seed = 1;
  auto rep = direct_theorem_experiment(entry.fn, Activation::logistic(), 1, {4, 8, 16, 32},
                                       kSupNorm, entry.domain, cfg);
  double beta = scalar_of(rep, "beta", 0.0);
  double lo = scalar_of(rep, "min_ratio", 0.0);
  double hi = scalar_of(rep, "max_ratio", 1e9);
  bool ok = lo > 0.0 && hi <= 5.0 * lo && beta >= 0.8;
  char buf[128];
  std::snprintf(buf, sizeof buf, "ratio band [%.4f, %.4f] (x%.2f), beta=%.4f", lo, hi,
                lo > 0 ? hi / lo : 0.0, beta);
  report(10, ok, "E_n / omega_1(f, 1/n) band <= 5x and rate exponent >= 0.8", buf);
}

// --- 11: remainder functional axioms -----------------------------------------
void criterion_11() {
  std::vector<TargetFunction> fs = {
      catalog_lookup("abs-kink").fn,
      catalog_lookup("sin-2pi").fn,
  };
  SolverConfig cfg;
  cfg.restarts = 8;
  cfg.iterations = 150;
  cfg.seed = 1;
  cfg.sampling = TensorGridSampling{65};
  auto rep = check_remainder_axioms(fs, {1, 2, 4}, Activation::logistic(), kSupNorm,
                                    Domain::unit_cube(1), cfg, 0.05);
  int bad = 0;
  for (const auto& c : rep.checks)
    if (!c.ok) ++bad;
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu checks, %d failed, slack=%.2f", rep.checks.size(), bad,
                rep.slack);
  report(11, rep.all_ok, "monotone / homogeneous / subadditive / stable remainders", buf);
}

// --- 12: gliding hump closed forms and the sharpness gap ---------------------
void criterion_12() {
  std::vector<ResonanceFunction> comps;
  std::vector<long long> idx = {4, 16, 64};
  for (long long n : idx) {
    SignedGrid sg{GridSpec{Domain::unit_cube(1), static_cast<int>(n)}, {}};
    for (long long i = 0; i <= n; ++i) sg.signs.push_back(i % 2 == 0 ? 1 : -1);
    comps.emplace_back(sg);
  }
  auto series = gliding_hump_compose(comps, idx, AbstractModulus::power(0.5),
                                     RateFunction::power(1, 1), 1, 3);
  bool forms = series.weights == std::vector<double>{0.5, 0.25, 0.125} &&
               series.weight_sum == 0.875 && series.eval({0.0}) == 0.875 &&
               series.as_target()({0.0}) - series.partial_sum(2, "p2")({0.0}) == 0.125;

  SolverConfig cfg;
  cfg.seed = 1;
  auto rep = sharpness_gap_experiment(Activation::logistic(), 1, 1, 0.5, 2, cfg);
  double min_ratio = scalar_of(rep, "min_ratio", 0.0);
  bool ok = forms && min_ratio >= 0.5;
  char buf[128];
  std::snprintf(buf, sizeof buf, "closed forms exact=%d, gap min_ratio=%.4f", forms ? 1 : 0,
                min_ratio);
  report(12, ok, "gliding-hump weights exact and m=2 gap ratios >= 0.5", buf);
}

// --- 13: byte-identical artifacts --------------------------------------------
void criterion_13() {
  SolverConfig cfg;
  cfg.restarts = 4;
  cfg.iterations = 60;
  cfg.seed = 7;
  cfg.sampling = TensorGridSampling{65};
  const auto& entry = catalog_lookup("abs-kink");
  auto a = direct_theorem_experiment(entry.fn, Activation::logistic(), 1, {2, 4, 8}, kSupNorm,
                                     entry.domain, cfg);
  auto b = direct_theorem_experiment(entry.fn, Activation::logistic(), 1, {2, 4, 8}, kSupNorm,
                                     entry.domain, cfg);
  bool ok = report_json(a) == report_json(b);
  for (std::size_t i = 0; ok && i < a.tables.size(); ++i)
    ok = table_csv(a.tables[i]) == table_csv(b.tables[i]);
  report(13, ok, "re-running an experiment with the same seed is byte-identical",
         ok ? "JSON and CSV artifacts match" : "artifacts differ");
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  criterion_13();
  auto secs = std::chrono::duration<double>(clock::now() - t0).count();
  std::printf("%d of 13 criteria passed in %.1f s\n", 13 - g_failures, secs);
  return g_failures == 0 ? 0 : 1;
}
