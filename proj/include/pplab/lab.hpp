#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pplab/asymptotics.hpp"
#include "pplab/distribution.hpp"
#include "pplab/series.hpp"

namespace pplab::lab {

inline constexpr const char* kLibraryVersion = "0.1.0";
inline constexpr int kExactBivariateCap = 2000;

struct IdentityReport {
  bool pass = true;
  std::vector<std::string> checks;    // one line per sub-check
  std::vector<std::string> failures;  // smallest counterexample first
};

// Exhaustive verification against the series engine:
//  (a) trace and conjugate-trace histograms coincide and match trace_series
//      for n <= n_max;
//  (b) the restricted joint identity
//      sum_omega x^n prod_j y_j^{D_j(omega)} =
//      prod_{k<=l} prod_{j<=r} (1 - y_j x^{k+j-1})^{-1}
//      with D_j the column-depth counts, at rational probe points,
//      for r <= r_max, l <= l_max (exact rational series comparison);
//  (c) x_distribution_exact rows equal exhaustive histograms of the matrix
//      statistic (units of diagonal weight > m under the inverse bijection
//      chain) for m in {0,1,2,3}, and at m = 0 equal the conjugate-trace
//      histogram; x_statistic is also checked pointwise against part_counts.
IdentityReport run_identity_suite(int n_max, int r_max, int l_max);

struct Prop1Result {
  double n = 0;
  long long m = 0;
  double y = 0;
  Real lhs;      // sum_k count(n,k) y^k / q(n) from the exact table
  Real rhs;      // f_m(e^{-d_n}, y) at the exact saddle point
  double relative_gap = 0;
};

Prop1Result proposition1_check(int n, long long m, double y);
// Variant reusing an already computed table (table.threshold must equal m).
Prop1Result proposition1_check(const series::BivariateTable& table, int n, double y);

struct ExperimentConfig {
  long long n = 0;
  double c = 0;
  long long samples = 1;
  std::uint64_t seed = 1;
  int workers = 1;
  std::string mode = "both";  // "mc" | "exact" | "both"
  std::string output;         // empty = stdout
  std::string format = "json";
  bool timing = false;        // include wall-clock in the JSON (volatile!)
};

struct PoissonReport {
  long long n = 0;
  double c = 0;
  double m_real = 0;
  long long m_int = 0;
  double lambda_target = 0;
  std::string mode;
  long long samples = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  std::optional<double> empirical_mean, empirical_variance;
  std::optional<std::string> exact_mean_rational;
  std::optional<double> exact_mean;
  std::optional<double> tv_empirical_vs_poisson;
  std::optional<double> tv_exact_vs_poisson;
  std::optional<double> tv_empirical_vs_exact;
  std::optional<DistributionTable> empirical, exact;
  double runtime_seconds = 0;  // reported on stderr, not in canonical JSON

  // Canonical JSON: fixed key order, no volatile fields unless with_timing.
  std::string to_json(bool with_timing = false) const;
};

// Records the tail-unit statistic at m = floor(threshold_m(n, c)) over
// `samples` exact-size draws; builds the exact law from x_distribution_exact
// when the mode asks for it and n is within the exact range (otherwise
// downgrades to monte-carlo with a warning on stderr).
PoissonReport run_poisson_experiment(const ExperimentConfig& cfg);

struct ScanRow {
  double n = 0;
  double c = 0;
  double m_real = 0;
  long long m_int = 0;
  double d_exact = 0;
  double u = 0;
  std::vector<double> y;
  std::vector<double> f_value;  // f_m(u_n, y)
  std::vector<double> limit;    // exp((2/3) e^{-c} (y-1))
  std::vector<double> gap;      // |f_value - limit|
  std::optional<double> exact_mean;
  std::optional<double> tv_exact_vs_poisson;
};

std::vector<ScanRow> convergence_scan(std::vector<double> n_grid, double c,
                                      const std::vector<double>& y_grid,
                                      int exact_cap = kExactBivariateCap);
std::string scan_to_csv(const std::vector<ScanRow>& rows);

// ---- persistence -----------------------------------------------------------

enum class CacheErrorKind { io, parse, version_mismatch, kind_mismatch, checksum };

class CacheError : public std::runtime_error {
 public:
  CacheError(CacheErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  CacheErrorKind kind() const { return kind_; }

 private:
  CacheErrorKind kind_;
};

// Round-trips series and bivariate tables losslessly (decimal strings) with
// a format-version header and a content checksum.
void cache_store(const std::string& path, const series::BigIntSeries& s,
                 const std::string& kind);
series::BigIntSeries cache_load_series(const std::string& path, const std::string& kind);
void cache_store(const std::string& path, const series::BivariateTable& t,
                 const std::string& kind);
series::BivariateTable cache_load_table(const std::string& path, const std::string& kind);

}  // namespace pplab::lab
