// Independent slow oracles used only by tests. These deliberately avoid the
// recurrences and closed forms used by the library, so agreement is evidence
// rather than tautology.
#pragma once

#include <map>
#include <vector>

#include "pplab/numeric.hpp"

namespace oracles {

using pplab::BigInt;
using pplab::Real;

// Multiplies out prod_{j=1}^{N} (1-x^j)^{-e(j)} term by term: each factor is
// expanded as the geometric series 1 + x^j + x^{2j} + ... applied e(j) times.
template <typename ExpFn>
std::vector<BigInt> product_expansion(int N, ExpFn exponent) {
  std::vector<BigInt> ser(N + 1, BigInt(0));
  ser[0] = 1;
  for (int j = 1; j <= N; ++j) {
    for (int rep = 0; rep < exponent(j); ++rep) {
      // multiply by (1 - x^j)^{-1}
      for (int n = j; n <= N; ++n) ser[n] += ser[n - j];
    }
  }
  return ser;
}

inline std::vector<BigInt> linear_counts_oracle(int N) {
  return product_expansion(N, [](int) { return 1; });
}

inline std::vector<BigInt> plane_counts_oracle(int N) {
  return product_expansion(N, [](int j) { return j; });
}

// Counts linear partitions of n with parts <= maxpart by backtracking.
inline long long count_linear_partitions(int n, int maxpart) {
  if (n == 0) return 1;
  long long total = 0;
  for (int first = std::min(n, maxpart); first >= 1; --first)
    total += count_linear_partitions(n - first, first);
  return total;
}

// Plain 200-term partial sum of -sum j log(1-u^j).
inline Real log_q_partial_sum(const Real& u, int terms = 200) {
  Real sum = 0, uj = 1;
  for (int j = 1; j <= terms; ++j) {
    uj *= u;
    sum -= j * log(Real(1) - uj);
  }
  return sum;
}

// Direct finite product for f_m over m < j <= jmax.
inline Real f_m_product(const Real& u, const Real& y, long long m, long long jmax) {
  Real prod = 1;
  for (long long j = m + 1; j <= jmax; ++j) {
    Real uj = pow(u, Real(static_cast<double>(j)));
    prod *= pow((1 - uj) / (1 - y * uj), Real(static_cast<double>(j)));
  }
  return prod;
}

// zeta(3) by the accelerated alternating series
// (5/2) sum_{k>=1} (-1)^{k-1} / (k^3 binom(2k,k)).
inline Real zeta3_accelerated(int terms = 64) {
  Real sum = 0;
  BigInt binom = 2;  // binom(2,1)
  for (int k = 1; k <= terms; ++k) {
    Real term = 1 / (Real(k) * k * k * pplab::to_real(binom));
    sum += (k % 2 ? term : -term);
    // binom(2(k+1), k+1) = binom(2k,k) * 2(2k+1)/(k+1)
    binom = binom * 2 * (2 * k + 1) / (k + 1);
  }
  return sum * 5 / 2;
}

}  // namespace oracles
