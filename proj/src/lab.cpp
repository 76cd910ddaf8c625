#include "pplab/lab.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "pplab/bijections.hpp"
#include "pplab/partition.hpp"
#include "pplab/sampler.hpp"

namespace pplab::lab {

using core::PlanePartition;
using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Identity suite
// ---------------------------------------------------------------------------

namespace {

// Truncated series with rational coefficients, used for probe evaluations.
using RatSeries = std::vector<Rational>;

// Multiply in place by (1 - y x^w)^{-1}: ser[n] += y * ser[n-w], ascending n.
void mul_geometric(RatSeries& ser, const Rational& y, int w) {
  for (size_t n = w; n < ser.size(); ++n) ser[n] += y * ser[n - w];
}

RatSeries lemma1_product(int N, int r, int l, const std::vector<Rational>& ys) {
  RatSeries ser(N + 1, Rational(0));
  ser[0] = 1;
  for (int k = 1; k <= l; ++k)
    for (int j = 1; j <= r; ++j) mul_geometric(ser, ys[j - 1], k + j - 1);
  return ser;
}

RatSeries lemma1_enumeration(int N, int r, int l, const std::vector<Rational>& ys) {
  RatSeries ser(N + 1, Rational(0));
  ser[0] = 1;
  for (int n = 1; n <= N; ++n) {
    Rational tot(0);
    core::enumerate_restricted(n, r, l, [&](const PlanePartition& pp) {
      Rational mono(1);
      for (const auto& [depth, cnt] : core::column_depth_counts(pp))
        for (long long i = 0; i < cnt; ++i) mono *= ys[depth - 1];
      tot += mono;
      return true;
    });
    ser[n] = tot;
  }
  return ser;
}

std::string hist_to_string(const std::map<long long, long long>& h) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [k, v] : h) {
    if (!first) out << ", ";
    first = false;
    out << k << ':' << v;
  }
  out << '}';
  return out.str();
}

}  // namespace

IdentityReport run_identity_suite(int n_max, int r_max, int l_max) {
  IdentityReport rep;
  auto fail = [&](const std::string& msg) {
    rep.pass = false;
    rep.failures.push_back(msg);
  };

  // (a) trace vs conjugate trace vs series
  auto tser = series::trace_series(n_max);
  for (int n = 0; n <= n_max && rep.pass; ++n) {
    std::map<long long, long long> ct_hist, tr_hist;
    core::enumerate_plane_partitions(n, [&](const PlanePartition& pp) {
      ct_hist[core::conjugate_trace(pp)] += 1;
      tr_hist[core::trace(pp)] += 1;
      return true;
    });
    if (ct_hist != tr_hist) {
      fail("trace histogram differs from conjugate-trace histogram at n=" +
           std::to_string(n) + ": " + hist_to_string(tr_hist) + " vs " +
           hist_to_string(ct_hist));
      break;
    }
    for (const auto& [t, cnt] : ct_hist)
      if (tser.entry(n, static_cast<int>(t)) != cnt) {
        fail("trace series mismatch at n=" + std::to_string(n) +
             " t=" + std::to_string(t));
        break;
      }
    if (tser.row_sum(n) != BigInt(static_cast<long long>([&] {
          long long s = 0;
          for (auto& [t, c] : ct_hist) s += c;
          return s;
        }()))) {
      fail("trace series row sum mismatch at n=" + std::to_string(n));
    }
  }
  rep.checks.push_back("trace / conjugate-trace / series coincide for n <= " +
                       std::to_string(n_max));

  // (b) restricted joint identity at rational probes
  const std::vector<std::vector<Rational>> probes = {
      {Rational(1, 2), Rational(1, 3), Rational(1, 5)},
      {Rational(1, 3), Rational(2, 5), Rational(1, 7)},
      {Rational(1), Rational(1), Rational(1)},
      {Rational(0), Rational(1, 2), Rational(1, 4)},
      {Rational(2, 3), Rational(1, 7), Rational(3, 5)},
      {Rational(5, 6), Rational(4, 7), Rational(1, 9)},
  };
  int probe_n = std::min(n_max, 10);
  for (int r = 1; r <= r_max && rep.pass; ++r)
    for (int l = 1; l <= l_max && rep.pass; ++l)
      for (const auto& ys : probes) {
        auto lhs = lemma1_enumeration(probe_n, r, l, ys);
        auto rhs = lemma1_product(probe_n, r, l, ys);
        for (int n = 0; n <= probe_n; ++n)
          if (lhs[n] != rhs[n]) {
            fail("joint identity fails at n=" + std::to_string(n) +
                 " r=" + std::to_string(r) + " l=" + std::to_string(l));
            break;
          }
        if (!rep.pass) break;
      }
  rep.checks.push_back("restricted joint identity exact at " +
                       std::to_string(probes.size()) + " probe vectors, r,l <= " +
                       std::to_string(r_max));

  // (c) x_distribution_exact vs exhaustive matrix-statistic histograms
  for (int m = 0; m <= 3 && rep.pass; ++m) {
    auto xd = series::x_distribution_exact(n_max, m);
    for (int n = 0; n <= n_max; ++n) {
      std::map<long long, long long> hist, ct_hist;
      bool stat_ok = true;
      core::enumerate_plane_partitions(n, [&](const PlanePartition& pp) {
        auto mat = bij::knuth_inverse(bij::bender_knuth_inverse(pp));
        hist[mat.units_above(m)] += 1;
        if (m == 0) ct_hist[core::conjugate_trace(pp)] += 1;
        // pointwise consistency of the per-value statistics
        long long via_counts = 0;
        for (const auto& [k, c] : core::part_counts(pp))
          if (k > m) via_counts += c;
        if (core::x_statistic(pp, m) != via_counts) stat_ok = false;
        return true;
      });
      if (!stat_ok) {
        fail("x_statistic disagrees with part_counts tail at n=" + std::to_string(n) +
             " m=" + std::to_string(m));
        break;
      }
      if (m == 0 && hist != ct_hist) {
        fail("matrix statistic at m=0 differs from conjugate trace at n=" +
             std::to_string(n));
        break;
      }
      bool row_ok = true;
      for (const auto& [k, cnt] : hist)
        if (xd.entry(n, static_cast<int>(k)) != cnt) row_ok = false;
      if (xd.row_sum(n) != BigInt([&] {
            long long s = 0;
            for (auto& [k, c] : hist) s += c;
            return s;
          }()))
        row_ok = false;
      if (!row_ok) {
        fail("x distribution mismatch at n=" + std::to_string(n) +
             " m=" + std::to_string(m) + ", enumeration " + hist_to_string(hist));
        break;
      }
    }
  }
  rep.checks.push_back("x distribution equals exhaustive law for m in {0..3}, n <= " +
                       std::to_string(n_max));
  return rep;
}

// ---------------------------------------------------------------------------
// Proposition 1
// ---------------------------------------------------------------------------

Prop1Result proposition1_check(const series::BivariateTable& table, int n, double y) {
  Prop1Result res;
  res.n = n;
  res.m = table.threshold;
  res.y = y;
  Real yy(y);
  Real num = 0, den = 0, yk = 1;
  const auto& row = table.rows.at(n);
  for (size_t k = 0; k < row.size(); ++k) {
    Real c = to_real(row[k]);
    num += c * yk;
    den += c;
    yk *= yy;
  }
  res.lhs = num / den;
  Real d = asym::saddle_exact(n);
  res.rhs = series::evaluate_f_m(exp(-d), yy, table.threshold);
  res.relative_gap = to_double(abs(res.lhs - res.rhs) / res.rhs);
  return res;
}

Prop1Result proposition1_check(int n, long long m, double y) {
  auto table = series::x_distribution_exact(n, static_cast<int>(m));
  return proposition1_check(table, n, y);
}

// ---------------------------------------------------------------------------
// Poisson experiment
// ---------------------------------------------------------------------------

namespace {

// Deterministic split: worker i draws a fixed quota from stream (seed, i).
std::vector<long long> parallel_tail_counts(const sampler::SamplerParams& params,
                                            long long samples, int workers,
                                            long long m) {
  std::vector<std::vector<long long>> partial(workers);
  auto work = [&](int w) {
    long long quota = samples / workers + (w < samples % workers ? 1 : 0);
    auto rs = rng::RandomSource::worker_stream(params.seed, w);
    std::vector<long long> hist;
    for (long long i = 0; i < quota; ++i) {
      for (;;) {
        auto draw = sampler::boltzmann_class_totals(params, rs, params.n);
        if (draw.total_weight != params.n) continue;
        long long x = 0;
        for (int wclass = static_cast<int>(m) + 1;
             wclass <= static_cast<int>(draw.totals.size()); ++wclass)
          x += draw.totals[wclass - 1];
        if (x >= static_cast<long long>(hist.size())) hist.resize(x + 1, 0);
        hist[x] += 1;
        break;
      }
    }
    partial[w] = std::move(hist);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<long long> hist;
  for (const auto& part : partial) {
    if (part.size() > hist.size()) hist.resize(part.size(), 0);
    for (size_t k = 0; k < part.size(); ++k) hist[k] += part[k];
  }
  return hist;
}

std::string rational_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace

PoissonReport run_poisson_experiment(const ExperimentConfig& cfg) {
  if (cfg.samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (cfg.n < 3) throw std::invalid_argument("experiment requires n >= 3");
  auto t0 = std::chrono::steady_clock::now();

  PoissonReport rep;
  rep.n = cfg.n;
  rep.c = cfg.c;
  rep.samples = cfg.samples;
  rep.seed = cfg.seed;
  rep.workers = cfg.workers;
  auto th = asym::threshold_m(static_cast<double>(cfg.n), cfg.c);
  rep.m_real = to_double(th.m_real);
  rep.m_int = th.m_int;
  rep.lambda_target = (2.0 / 3.0) * std::exp(-cfg.c);

  std::string mode = cfg.mode;
  bool want_exact = (mode == "exact" || mode == "both");
  bool want_mc = (mode == "mc" || mode == "both");
  if (want_exact && cfg.n > kExactBivariateCap) {
    std::cerr << "warning: n=" << cfg.n << " beyond the exact bivariate range ("
              << kExactBivariateCap << "); downgrading to monte-carlo\n";
    want_exact = false;
    want_mc = true;
    mode = "mc";
  }
  rep.mode = mode;

  auto pois = poisson_table(rep.lambda_target);

  if (want_mc) {
    auto params = sampler::SamplerParams::tuned(cfg.n, cfg.seed);
    auto hist = parallel_tail_counts(params, cfg.samples, cfg.workers, rep.m_int);
    rep.empirical = DistributionTable::from_samples(hist);
    rep.empirical_mean = rep.empirical->mean();
    rep.empirical_variance = rep.empirical->variance();
    rep.tv_empirical_vs_poisson = tv_distance(*rep.empirical, pois);
  }
  if (want_exact) {
    auto table = series::x_distribution_exact(static_cast<int>(cfg.n),
                                              static_cast<int>(rep.m_int));
    std::map<long long, BigInt> counts;
    const auto& row = table.rows.at(cfg.n);
    for (size_t k = 0; k < row.size(); ++k)
      if (row[k] != 0) counts[static_cast<long long>(k)] = row[k];
    rep.exact = DistributionTable::from_counts(counts, DistributionTable::Kind::exact);
    auto em = rep.exact->exact_mean();
    rep.exact_mean_rational = rational_string(em);
    rep.exact_mean = to_double(to_real(em));
    rep.tv_exact_vs_poisson = tv_distance(*rep.exact, pois);
    if (rep.empirical)
      rep.tv_empirical_vs_exact = tv_distance(*rep.empirical, *rep.exact);
  }
  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

namespace {

json table_to_json(const DistributionTable& t) {
  json j;
  j["kind"] = t.kind == DistributionTable::Kind::exact       ? "exact"
              : t.kind == DistributionTable::Kind::empirical ? "empirical"
                                                             : "poisson";
  if (t.total != 0) {
    json counts = json::object();
    for (const auto& [k, c] : t.counts) counts[std::to_string(k)] = c.str();
    j["counts"] = counts;
    j["total"] = t.total.str();
  }
  json mass = json::object();
  for (const auto& [k, p] : t.mass) mass[std::to_string(k)] = p;
  j["mass"] = mass;
  return j;
}

}  // namespace

std::string PoissonReport::to_json(bool with_timing) const {
  json j;
  j["library_version"] = kLibraryVersion;
  j["n"] = n;
  j["c"] = c;
  j["m_real"] = m_real;
  j["m_int"] = m_int;
  j["lambda_target"] = lambda_target;
  j["mode"] = mode;
  j["samples"] = samples;
  j["seed"] = seed;
  j["workers"] = workers;
  if (empirical_mean) j["empirical_mean"] = *empirical_mean;
  if (empirical_variance) j["empirical_variance"] = *empirical_variance;
  if (exact_mean_rational) j["exact_mean_rational"] = *exact_mean_rational;
  if (exact_mean) j["exact_mean"] = *exact_mean;
  if (tv_empirical_vs_poisson) j["tv_empirical_vs_poisson"] = *tv_empirical_vs_poisson;
  if (tv_exact_vs_poisson) j["tv_exact_vs_poisson"] = *tv_exact_vs_poisson;
  if (tv_empirical_vs_exact) j["tv_empirical_vs_exact"] = *tv_empirical_vs_exact;
  if (empirical) j["empirical"] = table_to_json(*empirical);
  if (exact) j["exact"] = table_to_json(*exact);
  if (with_timing) j["runtime_seconds"] = runtime_seconds;
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// Convergence scan
// ---------------------------------------------------------------------------

std::vector<ScanRow> convergence_scan(std::vector<double> n_grid, double c,
                                      const std::vector<double>& y_grid, int exact_cap) {
  if (n_grid.empty()) throw std::invalid_argument("empty n grid");
  std::sort(n_grid.begin(), n_grid.end());
  std::vector<ScanRow> rows;
  for (double n : n_grid) {
    ScanRow row;
    row.n = n;
    row.c = c;
    auto th = asym::threshold_m(n, c);
    row.m_real = to_double(th.m_real);
    row.m_int = th.m_int;
    Real d = asym::saddle_exact(n);
    row.d_exact = to_double(d);
    Real u = exp(-d);
    row.u = to_double(u);
    for (double y : y_grid) {
      row.y.push_back(y);
      Real f = series::evaluate_f_m(u, Real(y), th.m_int);
      Real lim = asym::limit_pgf_plane(c, Real(y));
      row.f_value.push_back(to_double(f));
      row.limit.push_back(to_double(lim));
      row.gap.push_back(to_double(abs(f - lim)));
    }
    if (n <= exact_cap && n == std::floor(n)) {
      auto table = series::x_distribution_exact(static_cast<int>(n),
                                                static_cast<int>(th.m_int));
      std::map<long long, BigInt> counts;
      const auto& r = table.rows.at(static_cast<size_t>(n));
      for (size_t k = 0; k < r.size(); ++k)
        if (r[k] != 0) counts[static_cast<long long>(k)] = r[k];
      auto exact = DistributionTable::from_counts(counts, DistributionTable::Kind::exact);
      row.exact_mean = to_double(to_real(exact.exact_mean()));
      row.tv_exact_vs_poisson =
          tv_distance(exact, poisson_table((2.0 / 3.0) * std::exp(-c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "n,c,m_real,m_int,d_exact,u,y,f_value,limit,gap,exact_mean,tv_exact_vs_poisson\n";
  out.precision(17);
  for (const auto& r : rows)
    for (size_t i = 0; i < r.y.size(); ++i) {
      out << r.n << ',' << r.c << ',' << r.m_real << ',' << r.m_int << ','
          << r.d_exact << ',' << r.u << ',' << r.y[i] << ',' << r.f_value[i] << ','
          << r.limit[i] << ',' << r.gap[i] << ',';
      if (r.exact_mean) out << *r.exact_mean;
      out << ',';
      if (r.tv_exact_vs_poisson) out << *r.tv_exact_vs_poisson;
      out << '\n';
    }
  return out.str();
}

}  // namespace pplab::lab
