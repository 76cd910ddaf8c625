#include "pplab/distribution.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace pplab::lab {

DistributionTable DistributionTable::from_counts(
    const std::map<long long, BigInt>& counts, Kind kind) {
  DistributionTable t;
  t.kind = kind;
  t.counts = counts;
  for (const auto& [k, c] : counts) {
    if (c < 0) throw std::invalid_argument("negative count");
    t.total += c;
  }
  if (t.total == 0) throw std::invalid_argument("empty distribution");
  Real tot = to_real(t.total);
  for (const auto& [k, c] : counts)
    if (c > 0) t.mass[k] = to_double(to_real(c) / tot);
  return t;
}

DistributionTable DistributionTable::from_samples(const std::vector<long long>& histogram) {
  std::map<long long, BigInt> counts;
  for (long long k = 0; k < static_cast<long long>(histogram.size()); ++k)
    if (histogram[k]) counts[k] = histogram[k];
  return from_counts(counts, Kind::empirical);
}

bool DistributionTable::normalized(double tol) const {
  double s = 0;
  for (const auto& [k, p] : mass) {
    if (p < 0) return false;
    s += p;
  }
  return std::abs(s - 1.0) <= tol;
}

double DistributionTable::mean() const {
  double m = 0;
  for (const auto& [k, p] : mass) m += static_cast<double>(k) * p;
  return m;
}

double DistributionTable::variance() const {
  double m = mean(), v = 0;
  for (const auto& [k, p] : mass) {
    double d = static_cast<double>(k) - m;
    v += d * d * p;
  }
  return v;
}

Rational DistributionTable::exact_mean() const {
  if (total == 0) throw std::logic_error("exact_mean requires counts");
  BigInt num = 0;
  for (const auto& [k, c] : counts) num += k * c;
  return Rational(num, total);
}

double tv_distance(const DistributionTable& a, const DistributionTable& b) {
  if (!a.normalized() || !b.normalized())
    throw std::invalid_argument("tv_distance requires normalized tables");
  std::set<long long> support;
  for (const auto& [k, p] : a.mass) support.insert(k);
  for (const auto& [k, p] : b.mass) support.insert(k);
  double s = 0;
  for (long long k : support) {
    auto ia = a.mass.find(k);
    auto ib = b.mass.find(k);
    double pa = ia == a.mass.end() ? 0.0 : ia->second;
    double pb = ib == b.mass.end() ? 0.0 : ib->second;
    s += std::abs(pa - pb);
  }
  return 0.5 * s;
}

DistributionTable poisson_table(double lambda, double tail) {
  if (lambda < 0) throw std::invalid_argument("poisson_table requires lambda >= 0");
  DistributionTable t;
  t.kind = DistributionTable::Kind::poisson;
  if (lambda == 0) {
    t.mass[0] = 1.0;
    return t;
  }
  double p = std::exp(-lambda);
  double cum = 0;
  for (long long k = 0;; ++k) {
    t.mass[k] = p;
    cum += p;
    if (1.0 - cum < tail) break;
    p *= lambda / static_cast<double>(k + 1);
    if (k > 10000) break;
  }
  return t;
}

}  // namespace pplab::lab
