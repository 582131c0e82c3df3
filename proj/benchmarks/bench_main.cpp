#include <benchmark/benchmark.h>

#include <cmath>

#include "ridgelab/best_approx.hpp"
#include "ridgelab/catalog.hpp"
#include "ridgelab/resonance.hpp"
#include "ridgelab/smoothness.hpp"
#include "ridgelab/vc_chain.hpp"

using namespace ridgelab;

namespace {

void BM_Modulus(benchmark::State& state) {
  const auto& entry = catalog_lookup("abs-kink");
  ModulusQuery q{1, 0.125, NormQuery{kSupNorm, TensorGridSampling{static_cast<int>(state.range(0))}},
                 AxisDirections{}};
  for (auto _ : state)
    benchmark::DoNotOptimize(modulus(entry.fn, q, entry.domain).value);
}
BENCHMARK(BM_Modulus)->Arg(65)->Arg(129)->Arg(257);

void BM_ResonanceEval(benchmark::State& state) {
  const int tau = static_cast<int>(state.range(0));
  SignedGrid sg{GridSpec{Domain::unit_cube(1), tau}, {}};
  for (int i = 0; i <= tau; ++i) sg.signs.push_back(i % 2 == 0 ? 1 : -1);
  ResonanceFunction h(sg);
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-4;
    if (x > 1.0) x = 0.0;
    benchmark::DoNotOptimize(h.eval({x}));
  }
}
BENCHMARK(BM_ResonanceEval)->Arg(4)->Arg(64)->Arg(1024);

void BM_BestApproxRestart(benchmark::State& state) {
  const auto& entry = catalog_lookup("abs-kink");
  SolverConfig cfg;
  cfg.restarts = 1;
  cfg.iterations = static_cast<int>(state.range(0));
  cfg.sampling = TensorGridSampling{65};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        best_approx(entry.fn, 2, Activation::logistic(), kSupNorm, entry.domain, cfg).error);
}
BENCHMARK(BM_BestApproxRestart)->Arg(25)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_VerifyChain(benchmark::State& state) {
  const long long hi = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_corsharp_chain(1.0, 64.0, 2, hi, 1).pass);
}
BENCHMARK(BM_VerifyChain)->Arg(1000)->Arg(100000)->Arg(1000000);

}  // namespace

BENCHMARK_MAIN();
