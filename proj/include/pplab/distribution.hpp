#pragma once

#include <map>
#include <vector>

#include "pplab/numeric.hpp"

namespace pplab::lab {

// Finitely supported distribution over non-negative integers. Exact tables
// keep their integer counts so means can be formed as rationals before any
// rounding; empirical and Poisson tables carry real masses.
struct DistributionTable {
  enum class Kind { exact, empirical, poisson };
  Kind kind = Kind::exact;
  std::map<long long, double> mass;     // normalized
  std::map<long long, BigInt> counts;   // exact/empirical backing
  BigInt total = 0;

  static DistributionTable from_counts(const std::map<long long, BigInt>& counts,
                                       Kind kind);
  static DistributionTable from_samples(const std::vector<long long>& histogram);

  bool normalized(double tol = 1e-9) const;
  double mean() const;
  double variance() const;
  Rational exact_mean() const;  // requires counts
};

// Half the L1 distance over the union support. Inputs must be normalized.
double tv_distance(const DistributionTable& a, const DistributionTable& b);

// Poisson(lambda) truncated once the remaining tail mass drops below `tail`.
DistributionTable poisson_table(double lambda, double tail = 1e-12);

}  // namespace pplab::lab
