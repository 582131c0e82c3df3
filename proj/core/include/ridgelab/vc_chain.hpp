#pragma once

#include <vector>

namespace ridgelab {

/// 2 (nd + 2n + 1) log2(24 e (nd + 2n + 1) D), the VC-dimension bound for a
/// width-n sigmoid network class with an extra constant, on a size-D grid scale.
double bartlett_bound(long long n, int d, long long D);

/// D(n) = floor((E n (1 + log2 n))^(1/d)) with integer-safe root extraction.
long long grid_size_D(long long n, int d, double e_constant);

struct ChainRow {
  long long n = 0;
  // The displayed inequality chain, left to right:
  double vc_start = 0.0;   // C_d n [log2 n + (1/d) log2(E n (1 + log2 n))]
  double split = 0.0;      // C_d n [2 log2 n + log2 E + log2(2 log2 n)]
  double rounded = 0.0;    // C_d n [3 log2 n + log2 E + 1]
  double grouped = 0.0;    // 4 C_d n log2 n [1 + log2 E]
  double budget = 0.0;     // E n log2 n
  long long grid_dim = 0;  // D(n)
  double grid_capacity = 0.0;  // [D(n)]^d
  double tau_4n = 0.0;     // 2 D(4n)
  double tau_bound = 0.0;  // 2 (12 E)^(1/d) / phi(n), phi(x) = (x (1 + log2 x))^(-1/d)
  bool chain_ok = false;   // vc_start <= split <= rounded <= grouped < budget <= capacity
  bool tau_ok = false;     // tau_4n <= tau_bound
};

struct VCChainReport {
  double c_d = 1.0;
  double e_constant = 64.0;
  int dim = 1;
  long long n_lo = 2, n_hi = 2;
  bool premise_ok = false;   // 4 C_d [1 + log2 E] < E
  double premise_lhs = 0.0;
  double premise_rhs = 0.0;
  long long first_all_ok = -1;  // smallest n in range from which every row holds
  long long failures = 0;
  std::vector<ChainRow> sample_rows;  // all failures (capped) plus log-spaced spot rows
  bool pass = false;  // premise_ok and no row failure
};

/// Evaluates, for every n in [n_lo, n_hi], each inequality step of the
/// VC-dimension versus grid-capacity chain together with the scale condition
/// tau(4n) = 2 D(4n) <= 2 (12 E)^(1/d) / phi(n). Pure arithmetic, no RNG.
VCChainReport verify_corsharp_chain(double c_d, double e_constant, long long n_lo,
                                    long long n_hi, int d);

}  // namespace ridgelab
