#pragma once

#include <optional>
#include <vector>

#include "ridgelab/network.hpp"
#include "ridgelab/resonance.hpp"

namespace ridgelab {

struct ShatterConfig {
  int restarts = 16;
  int iterations = 300;
  double step_size = 0.1;
  double margin_target = 0.1;
  bool constant_term = false;  // allow g + a0
  unsigned seed = 1;
  long max_assignments = 512;  // cap for the randomized sign search
};

struct ShatterFitResult {
  bool fit = false;
  NetworkParams params;
  double constant = 0.0;  // a0, only meaningful with constant_term
  double margin = 0.0;    // min_i s_i g(x_i) of the best attempt
};

/// Tries to reproduce the signs s_i at the given points with a width-n
/// network, by multi-start hinge-loss descent. Any strictly sign-matching
/// parameter set is scaled up to the margin target (the margin is
/// 1-homogeneous in the outer weights), so fit means margin >= target.
ShatterFitResult shatter_fit(int n, const Activation& sigma, const std::vector<Point>& points,
                             const std::vector<int>& signs, const ShatterConfig& cfg = {});

/// Exhaustive scan of a single neuron a sigma(w x + c) over a dense cubic
/// (a, w, c) grid, d = 1: reports whether any triple matches all signs
/// strictly, plus the best margin seen.
struct DenseSignScan {
  bool found = false;
  double best_margin = 0.0;
  double a = 0.0, w = 0.0, c = 0.0;
};
DenseSignScan dense_grid_sign_scan(const Activation& sigma, const std::vector<double>& xs,
                                   const std::vector<int>& signs, double param_range = 50.0,
                                   int steps_per_axis = 101);

struct UnshatterableSearch {
  std::optional<SignedGrid> result;
  bool proven = false;  // n=1, d=1 single monotone ridge: >= 2 sign changes suffice
  std::vector<double> failure_margins;
  long assignments_tried = 0;
};

/// Looks for a sign assignment on the grid that shatter_fit cannot realize:
/// exhaustive for <= 20 points, randomized (seeded) otherwise. For a single
/// monotone ridge in d = 1 the alternating assignment is returned directly.
UnshatterableSearch find_unshatterable_signs(int n, const Activation& sigma, const GridSpec& grid,
                                             const ShatterConfig& cfg = {});

}  // namespace ridgelab
