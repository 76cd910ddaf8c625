#include "pplab/series.hpp"

#include <cmath>
#include <stdexcept>

namespace pplab::series {

BigInt BivariateTable::row_sum(int n) const {
  BigInt s = 0;
  for (const auto& c : rows.at(n)) s += c;
  return s;
}

BigInt divisor_power_sum(std::uint64_t k, int r) {
  if (k == 0) throw std::invalid_argument("divisor_power_sum requires k >= 1");
  if (r != 1 && r != 2) throw std::invalid_argument("exponent must be 1 or 2");
  BigInt s = 0;
  for (std::uint64_t d = 1; d * d <= k; ++d) {
    if (k % d) continue;
    std::uint64_t e = k / d;
    s += (r == 1) ? BigInt(d) : BigInt(d) * d;
    if (e != d) s += (r == 1) ? BigInt(e) : BigInt(e) * e;
  }
  return s;
}

// Sieve of sigma_r(w) for w <= N, restricted to divisors d <= dmax.
// Values fit in 64 bits for every N this engine supports.
static std::vector<std::uint64_t> sigma_sieve(int N, int r, int dmax) {
  std::vector<std::uint64_t> s(static_cast<size_t>(N) + 1, 0);
  for (int d = 1; d <= std::min(N, dmax); ++d) {
    std::uint64_t dr = (r == 1) ? static_cast<std::uint64_t>(d)
                                : static_cast<std::uint64_t>(d) * d;
    for (int w = d; w <= N; w += d) s[w] += dr;
  }
  return s;
}

static BigIntSeries euler_counts(int N, int r) {
  if (N < 0) throw std::invalid_argument("truncation order must be >= 0");
  auto sig = sigma_sieve(N, r, N);
  BigIntSeries out;
  out.coeffs.assign(static_cast<size_t>(N) + 1, BigInt(0));
  out.coeffs[0] = 1;
  for (int n = 1; n <= N; ++n) {
    BigInt acc = 0;
    for (int k = 1; k <= n; ++k) acc += sig[k] * out.coeffs[n - k];
    out.coeffs[n] = acc / n;  // exact by construction
  }
  return out;
}

BigIntSeries linear_partition_counts(int N) { return euler_counts(N, 1); }
BigIntSeries plane_partition_counts(int N) { return euler_counts(N, 2); }

// Shared recurrence for prod_{j<=m}(1-x^j)^{-j} prod_{j>m}(1-y x^j)^{-j}:
//   n c_n(y) = sum_{j<=m, s>=1, js<=n} j^2 c_{n-js}(y)
//            + sum_{j>m,  s>=1, js<=n} j^2 y^s c_{n-js}(y).
// The first sum collapses to sum_w sigma2_{<=m}(w) c_{n-w}.
BivariateTable x_distribution_exact(int N, int m) {
  if (N < 0) throw std::invalid_argument("truncation order must be >= 0");
  if (m < 0) throw std::invalid_argument("threshold must be >= 0");
  auto sig = sigma_sieve(N, 2, m);
  BivariateTable tab;
  tab.truncation_order = N;
  tab.threshold = m;
  tab.rows.resize(static_cast<size_t>(N) + 1);
  tab.rows[0] = {BigInt(1)};
  std::vector<BigInt> acc;
  for (int n = 1; n <= N; ++n) {
    int max_t = (m > 0) ? n / (m + 1) : n;
    acc.assign(static_cast<size_t>(max_t) + 1, BigInt(0));
    if (m > 0) {
      for (int w = 1; w <= n; ++w) {
        if (!sig[w]) continue;
        const auto& prev = tab.rows[n - w];
        for (size_t t = 0; t < prev.size(); ++t) acc[t] += sig[w] * prev[t];
      }
    }
    for (int j = m + 1; j <= n; ++j) {
      std::uint64_t j2 = static_cast<std::uint64_t>(j) * j;
      for (int s = 1; j * s <= n; ++s) {
        const auto& prev = tab.rows[n - j * s];
        for (size_t t = 0; t < prev.size(); ++t) acc[t + s] += j2 * prev[t];
      }
    }
    while (!acc.empty() && acc.back() == 0) acc.pop_back();
    for (auto& c : acc) c /= n;  // exact
    tab.rows[n] = acc;
  }
  return tab;
}

BivariateTable trace_series(int N) { return x_distribution_exact(N, 0); }

BivariateFloatTable x_distribution_float(int N, int m) {
  if (N < 0) throw std::invalid_argument("truncation order must be >= 0");
  if (m < 0) throw std::invalid_argument("threshold must be >= 0");
  auto sig = sigma_sieve(N, 2, m);
  // Rows are kept normalized to sum 1; scale[n] = log2 of the true row sum.
  std::vector<std::vector<double>> rows(static_cast<size_t>(N) + 1);
  std::vector<double> scale(static_cast<size_t>(N) + 1, 0.0);
  rows[0] = {1.0};
  std::vector<double> acc;
  for (int n = 1; n <= N; ++n) {
    int max_t = (m > 0) ? n / (m + 1) : n;
    acc.assign(static_cast<size_t>(max_t) + 1, 0.0);
    double ref = scale[n - 1];  // row sums grow monotonically
    if (m > 0) {
      for (int w = 1; w <= n; ++w) {
        if (!sig[w]) continue;
        const auto& prev = rows[n - w];
        double f = static_cast<double>(sig[w]) * std::exp2(scale[n - w] - ref);
        for (size_t t = 0; t < prev.size(); ++t) acc[t] += f * prev[t];
      }
    }
    for (int j = m + 1; j <= n; ++j) {
      double j2 = static_cast<double>(j) * j;
      for (int s = 1; j * s <= n; ++s) {
        const auto& prev = rows[n - j * s];
        double f = j2 * std::exp2(scale[n - j * s] - ref);
        for (size_t t = 0; t < prev.size(); ++t) acc[t + s] += f * prev[t];
      }
    }
    double sum = 0.0;
    for (double v : acc) sum += v;
    sum /= n;
    for (auto& v : acc) v /= (sum * n);
    rows[n] = acc;
    scale[n] = ref + std::log2(sum);
  }
  BivariateFloatTable tab;
  tab.truncation_order = N;
  tab.threshold = m;
  tab.rows = std::move(rows);
  tab.log2_row_sum = std::move(scale);
  return tab;
}

Real evaluate_log_Q(const Real& u, const Real& tail_tolerance) {
  if (!(u > 0 && u < 1))
    throw std::domain_error("evaluate_log_Q requires u in (0,1)");
  Real sum = 0, uj = 1;
  for (long long j = 1;; ++j) {
    uj *= u;
    Real term = -j * log1m(uj);
    sum += term;
    if (term < tail_tolerance) break;
    if (j > 100000000) throw std::runtime_error("log Q tail did not converge");
  }
  return sum;
}

Real evaluate_f_m(const Real& u, const Real& y, long long m) {
  if (!(u > 0 && u < 1))
    throw std::domain_error("evaluate_f_m requires u in (0,1)");
  if (!(y >= 0 && y <= 1))
    throw std::domain_error("evaluate_f_m requires y in [0,1]");
  if (m < 0) m = 0;
  if (y == 1) return Real(1);
  Real sum = 0;
  Real uj = pow(u, Real(static_cast<double>(m)));
  if (uj == 0) return Real(1);  // tail underflows entirely
  for (long long j = m + 1;; ++j) {
    uj *= u;
    if (j * uj < kTailCutoff) break;
    sum += j * (log1m(uj) - log1m(y * uj));
  }
  return exp(sum);
}

}  // namespace pplab::series
