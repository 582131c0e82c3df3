#pragma once

#include <optional>
#include <vector>

#include "ridgelab/domain.hpp"
#include "ridgelab/network.hpp"
#include "ridgelab/polynomial.hpp"
#include "ridgelab/ridge.hpp"

namespace ridgelab {

struct PolyNetworkResult {
  NetworkParams params;
  double achieved_error = 0.0;  // sampled sup error on the domain
  bool reached_target = false;
  double step_used = 0.0;       // divided-difference node spacing h
  double anchor = 0.0;          // c0
};

/// Realizes a polynomial by a network: each ridge component p_j(w_j . x) is
/// reproduced from k+1 probes of b -> sigma(b (w_j . x) + c0) at nodes of
/// spacing h around b = 0, with weights from a moment-matching Vandermonde
/// solve. h is picked from a geometric ladder by sampled sup error.
/// Needs sigma^(i)(c0) != 0 for i = 0..k; the anchor is scanned if not given.
PolyNetworkResult poly_by_network(const Polynomial& q, const Activation& sigma,
                                  int neuron_budget, double epsilon_target,
                                  const Domain& domain,
                                  std::optional<double> anchor = std::nullopt,
                                  unsigned seed = 1);

/// Sampled sup norms of d^alpha (q - g) grouped by derivative order 0..max_order.
std::vector<double> simultaneous_error(const Polynomial& q, const NetworkParams& params,
                                       int max_order, const Domain& domain,
                                       int resolution = 129);

/// Anchor c0 with |sigma^(i)(c0)| >= 1e-6 for all i = 0..max_order, scanned
/// over +-{0.1, ..., 2.0}. Throws derivative-vanishes-at-anchor when none fits.
double find_anchor(const Activation& sigma, int max_order);

}  // namespace ridgelab
