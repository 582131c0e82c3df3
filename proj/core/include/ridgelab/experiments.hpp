#pragma once

#include <vector>

#include "ridgelab/best_approx.hpp"
#include "ridgelab/report.hpp"

namespace ridgelab {

/// Tabulates found E_n upper bounds against omega_r(f, n^(-1/d)) over a
/// warm-start width chain. Verdict: pass when the ratio column stays within a
/// factor 5 band, fail only when it blows up monotonically by more than 4x.
/// When reuse_params is given (one entry per width) the solver is skipped and
/// those parameters are scored instead; with outer weights scaled by c this
/// reproduces the ratio column of c*f exactly.
ExperimentReport direct_theorem_experiment(const TargetFunction& f, const Activation& sigma,
                                           int r, const std::vector<int>& widths, double p,
                                           const Domain& domain, const SolverConfig& cfg,
                                           const std::vector<NetworkParams>* reuse_params = nullptr);

/// L2 variant for ReLU^k on a ball: compares E_n in the 2-norm against
/// omega_r(f, n^(-1/d))_2 + n^(-r/d) ||f||_2. Requires d >= 2 and
/// r < k + 1 + (d-1)/2, otherwise throws hypothesis-violation.
ExperimentReport l2_relu_experiment(const TargetFunction& f, int k, int r,
                                    const std::vector<int>& widths, const Domain& domain,
                                    const SolverConfig& cfg);

/// Builds the truncated gliding-hump target for omega(delta) = delta^(alpha d / r)
/// and phi(x) = (x (1 + log2 x))^(-1/d) at indices n_j = 4^j, then checks that
/// the found E_{n_j/4}(f) stays bounded away from zero relative to the
/// component weight. Requires 0 < alpha < r/d.
ExperimentReport sharpness_gap_experiment(const Activation& sigma, int r, int d, double alpha,
                                          int m_terms, const SolverConfig& cfg);

/// d = 1 simultaneous approximation: realizes the degree-min(n-1, 6) projection
/// of f as a width-n network and tabulates sup errors of all derivative orders
/// 0..k against the n^-(k-order) scale.
ExperimentReport synchronous_error_experiment_d1(const TargetFunction& f, const Activation& sigma,
                                                 int k, const std::vector<int>& widths,
                                                 const Domain& domain, const SolverConfig& cfg);

}  // namespace ridgelab
