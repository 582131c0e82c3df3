#include "ridgelab/vc_chain.hpp"

#include <cmath>
#include <stdexcept>

namespace ridgelab {
namespace {

long double pow_ld(long double base, int exp) {
  long double r = 1.0L;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

ChainRow evaluate_row(long long n, int d, double c_d, double e_constant) {
  ChainRow row;
  row.n = n;
  const long double L = std::log2(static_cast<long double>(n));
  const long double lgE = std::log2(static_cast<long double>(e_constant));
  const long double nn = static_cast<long double>(n);

  row.vc_start = static_cast<double>(
      c_d * nn * (L + std::log2(e_constant * nn * (1.0L + L)) / d));
  row.split = static_cast<double>(c_d * nn * (2.0L * L + lgE + std::log2(2.0L * L)));
  row.rounded = static_cast<double>(c_d * nn * (3.0L * L + lgE + 1.0L));
  row.grouped = static_cast<double>(4.0L * c_d * nn * L * (1.0L + lgE));
  row.budget = static_cast<double>(e_constant * nn * L);
  row.grid_dim = grid_size_D(n, d, e_constant);
  row.grid_capacity = static_cast<double>(pow_ld(static_cast<long double>(row.grid_dim), d));
  row.chain_ok = row.vc_start <= row.split && row.split <= row.rounded &&
                 row.rounded <= row.grouped && row.grouped < row.budget &&
                 row.budget <= row.grid_capacity;

  row.tau_4n = 2.0 * static_cast<double>(grid_size_D(4 * n, d, e_constant));
  const long double phi = 1.0L / std::pow(nn * (1.0L + L), 1.0L / d);
  row.tau_bound = static_cast<double>(2.0L * std::pow(12.0L * e_constant, 1.0L / d) / phi);
  row.tau_ok = row.tau_4n <= row.tau_bound;
  return row;
}

}  // namespace

double bartlett_bound(long long n, int d, long long D) {
  if (n < 1 || d < 1 || D < 1) throw std::invalid_argument("bartlett_bound: arguments must be >= 1");
  const long double params = static_cast<long double>(n) * d + 2.0L * n + 1.0L;
  const long double e = 2.718281828459045235360287471352662498L;
  return static_cast<double>(2.0L * params * std::log2(24.0L * e * params * D));
}

long long grid_size_D(long long n, int d, double e_constant) {
  if (n < 2 || d < 1 || !(e_constant > 1.0))
    throw std::invalid_argument("grid_size_D: need n >= 2, d >= 1, E > 1");
  const long double x = static_cast<long double>(e_constant) * n *
                        (1.0L + std::log2(static_cast<long double>(n)));
  long long k = static_cast<long long>(std::llround(std::pow(x, 1.0L / d)));
  while (k > 0 && pow_ld(static_cast<long double>(k), d) > x) --k;
  while (pow_ld(static_cast<long double>(k + 1), d) <= x) ++k;
  return k;
}

VCChainReport verify_corsharp_chain(double c_d, double e_constant, long long n_lo, long long n_hi,
                                    int d) {
  if (n_lo < 2 || n_hi < n_lo || d < 1 || c_d <= 0.0 || !(e_constant > 1.0))
    throw std::invalid_argument("verify_corsharp_chain: need 2 <= n_lo <= n_hi, d >= 1, C_d > 0, E > 1");

  VCChainReport report;
  report.c_d = c_d;
  report.e_constant = e_constant;
  report.dim = d;
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  report.premise_lhs = 4.0 * c_d * (1.0 + std::log2(e_constant));
  report.premise_rhs = e_constant;
  report.premise_ok = report.premise_lhs < report.premise_rhs;

  constexpr long long kMaxFailureRows = 32;
  long long spot = n_lo;
  long long failure_rows = 0;
  long long last_bad = n_lo - 1;
  for (long long n = n_lo; n <= n_hi; ++n) {
    ChainRow row = evaluate_row(n, d, c_d, e_constant);
    const bool ok = row.chain_ok && row.tau_ok;
    if (!ok) {
      ++report.failures;
      last_bad = n;
      if (failure_rows < kMaxFailureRows) {
        report.sample_rows.push_back(row);
        ++failure_rows;
      }
    } else if (n == spot || n == n_hi) {
      report.sample_rows.push_back(row);
    }
    if (n == spot) spot = spot < 4 ? spot + 1 : spot * 2;
  }
  if (last_bad < n_hi) report.first_all_ok = last_bad + 1;
  report.pass = report.premise_ok && report.failures == 0;
  return report;
}

}  // namespace ridgelab
