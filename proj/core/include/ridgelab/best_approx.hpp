#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ridgelab/domain.hpp"
#include "ridgelab/network.hpp"
#include "ridgelab/norm.hpp"
#include "ridgelab/target_function.hpp"

namespace ridgelab {

struct SolverConfig {
  int restarts = 16;
  int iterations = 200;       // gradient steps per annealing stage
  double step_size = 0.05;    // Adam base learning rate
  double step_decay = 0.7;    // multiplier applied per stage
  double outer_scale = 1.0;   // spread of random outer weights before refit
  double weight_norm_min = 0.1;   // |w| drawn log-uniformly from this range
  double weight_norm_max = 50.0;
  std::vector<double> temperatures = {1.0, 0.3, 0.1, 0.03, 0.01};
  unsigned seed = 1;
  double tolerance = 1e-10;
  int jobs = 0;  // 0 = hardware concurrency
  std::variant<TensorGridSampling, MonteCarloSampling> sampling = TensorGridSampling{129};
  std::optional<NetworkParams> warm_start;  // padded with zero neurons to width n
};

struct BestApproxResult {
  NetworkParams params;
  double error = 0.0;                  // min over restarts, re-scored exactly
  std::vector<double> restart_errors;  // inf marks a diverged restart
  int best_restart = -1;
  long iterations_used = 0;
  int diverged_restarts = 0;
  bool polished = false;
};

/// Upper-bound estimate of E(M_n, f)_{p,Omega} by multi-start first-order
/// minimization. Restart 0 is always the zero network, so the result never
/// exceeds the sampled norm of f. For p = inf the objective is a normalized
/// log-sum-exp surrogate annealed down cfg.temperatures and always re-scored
/// with the exact sampled max; outer weights are refit between stages
/// (minimax LP for sup, least squares otherwise). Small parameter counts get
/// a Nelder-Mead polish. Deterministic given cfg.seed, independent of jobs.
BestApproxResult best_approx(const TargetFunction& f, int n, const Activation& sigma,
                             double p, const Domain& domain, const SolverConfig& cfg = {});

/// Warm-start chain over increasing widths: each solve seeds the next with
/// the previous parameters padded by zero neurons, so reported errors are
/// non-increasing by construction.
std::vector<BestApproxResult> best_approx_chain(const TargetFunction& f,
                                                const std::vector<int>& widths,
                                                const Activation& sigma, double p,
                                                const Domain& domain,
                                                const SolverConfig& cfg = {});

/// Brute-force scan of a single neuron a sigma(w x + c) over a dense cubic
/// (a, w, c) grid; only d = 1. Returns the smallest sampled error over the
/// grid, a lower bound for anything that grid can express.
double dense_grid_lower_bound(const TargetFunction& f, const Activation& sigma,
                              const Domain& domain, double param_range = 50.0,
                              int steps_per_axis = 101, int resolution = 129);

struct AxiomCheck {
  std::string axiom;     // "monotonicity" | "homogeneity" | "subadditivity" | "stability"
  std::string instance;
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = false;
};

struct RemainderAxiomReport {
  std::vector<AxiomCheck> checks;
  double slack = 0.05;
  bool all_ok = false;
};

/// Constructive checks of the remainder-functional axioms on found upper
/// bounds: warm-start chains give monotonicity, outer-weight scaling gives
/// homogeneity, parameter concatenation gives subadditivity, and the zero
/// restart gives stability against the sampled norm.
RemainderAxiomReport check_remainder_axioms(const std::vector<TargetFunction>& fs,
                                            const std::vector<int>& widths,
                                            const Activation& sigma, double p,
                                            const Domain& domain,
                                            const SolverConfig& cfg = {},
                                            double slack = 0.05);

}  // namespace ridgelab
