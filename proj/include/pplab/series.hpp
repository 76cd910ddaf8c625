#pragma once

#include <cstdint>
#include <vector>

#include "pplab/numeric.hpp"

namespace pplab::series {

// Truncated power series with exact integer coefficients, index 0..N.
struct BigIntSeries {
  std::vector<BigInt> coeffs;
  int truncation_order() const { return static_cast<int>(coeffs.size()) - 1; }
  const BigInt& at(int n) const { return coeffs.at(n); }
};

// Truncated bivariate table: rows[n][t] is the coefficient of y^t x^n.
// Rows are dense in t; entries outside a row are zero.
struct BivariateTable {
  int truncation_order = 0;
  int threshold = 0;  // the m the table was built with (0 for the trace table)
  std::vector<std::vector<BigInt>> rows;

  BigInt entry(int n, int t) const {
    if (n < 0 || n > truncation_order) return BigInt(0);
    const auto& r = rows[n];
    if (t < 0 || t >= static_cast<int>(r.size())) return BigInt(0);
    return r[t];
  }
  BigInt row_sum(int n) const;
};

// Normalized floating-point variant for ranges where exact integers are too
// costly. Each row is the distribution of y-degree at that x-degree; log
// scale of the row sum is tracked separately. Not exact.
struct BivariateFloatTable {
  int truncation_order = 0;
  int threshold = 0;
  std::vector<std::vector<double>> rows;  // normalized per row
  std::vector<double> log2_row_sum;       // log2 of the unnormalized row sum
};

// sigma_r(k) = sum of d^r over divisors d of k, r in {1, 2}. k = 0 rejected.
BigInt divisor_power_sum(std::uint64_t k, int r);

// Coefficients of prod_{j>=1} (1-x^j)^{-1}: linear partition counts p(n).
BigIntSeries linear_partition_counts(int N);

// Coefficients of prod_{j>=1} (1-x^j)^{-j}: plane partition counts q(n).
// Uses the log-derivative recurrence n q(n) = sum_k sigma_2(k) q(n-k).
BigIntSeries plane_partition_counts(int N);

// Coefficients of prod_{j>=1} (1-y x^j)^{-j}: entry (n, t) counts plane
// partitions of n with conjugate trace t.
BivariateTable trace_series(int N);

// Coefficients of prod_{j<=m} (1-x^j)^{-j} * prod_{j>m} (1-y x^j)^{-j}.
// Specializing y = 1 gives q(n); m = 0 gives trace_series. Row n has
// y-degree at most n/(m+1). Entry (n, k) is the number of plane partitions
// of n whose image under the matrix correspondence has k units of diagonal
// weight above m; at m = 0 this is the conjugate-trace count.
BivariateTable x_distribution_exact(int N, int m);

// Same table in the scaled floating mode (labeled non-exact).
BivariateFloatTable x_distribution_float(int N, int m);

// sum_{j>=1} -j log(1 - u^j), truncated once terms drop below tail_tolerance.
Real evaluate_log_Q(const Real& u, const Real& tail_tolerance = kTailCutoff);

// prod_{j>m} ((1-u^j)/(1-y u^j))^j evaluated by log sums with the shared
// absolute tail cutoff. Requires 0 < u < 1 and y in [0, 1].
Real evaluate_f_m(const Real& u, const Real& y, long long m);

}  // namespace pplab::series
