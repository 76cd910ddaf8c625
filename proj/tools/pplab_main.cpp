// Command-line front end: exact counts, enumeration, distribution tables,
// uniform sampling, asymptotic tables, Poisson experiments, verification
// suites and convergence scans. Exit status is non-zero when a verification
// fails.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <boost/math/distributions/chi_squared.hpp>
#include <nlohmann/json.hpp>

#include "pplab/bijections.hpp"
#include "pplab/lab.hpp"
#include "pplab/partition.hpp"
#include "pplab/sampler.hpp"

using json = nlohmann::ordered_json;
using namespace pplab;

namespace {

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string series_to_text(const series::BigIntSeries& s, const std::string& fmt) {
  std::ostringstream out;
  if (fmt == "json") {
    json j = json::array();
    for (int n = 0; n <= s.truncation_order(); ++n)
      j.push_back(json::array({n, s.coeffs[n].str()}));
    out << j.dump(1);
  } else {
    if (fmt == "csv") out << "n,value\n";
    for (int n = 0; n <= s.truncation_order(); ++n)
      out << n << (fmt == "csv" ? "," : " ") << s.coeffs[n].str() << "\n";
  }
  return out.str();
}

std::string table_to_text(const series::BivariateTable& t, const std::string& fmt) {
  std::ostringstream out;
  if (fmt == "json") {
    json j = json::array();
    for (int n = 0; n <= t.truncation_order; ++n)
      for (int k = 0; k < static_cast<int>(t.rows[n].size()); ++k)
        if (t.rows[n][k] != 0) j.push_back(json::array({n, k, t.rows[n][k].str()}));
    out << j.dump(1);
  } else {
    if (fmt == "csv") out << "n,t,value\n";
    const char* sep = (fmt == "csv") ? "," : " ";
    for (int n = 0; n <= t.truncation_order; ++n)
      for (int k = 0; k < static_cast<int>(t.rows[n].size()); ++k)
        if (t.rows[n][k] != 0)
          out << n << sep << k << sep << t.rows[n][k].str() << "\n";
  }
  return out.str();
}

std::vector<double> parse_grid(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

int run_verify(const std::string& suite) {
  bool ok = true;
  auto banner = [](const std::string& name, bool pass) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << "\n";
  };
  if (suite == "identities" || suite == "all") {
    auto rep = lab::run_identity_suite(12, 3, 3);
    for (const auto& line : rep.checks) std::cout << "  " << line << "\n";
    for (const auto& f : rep.failures) std::cout << "  counterexample: " << f << "\n";
    banner("identities", rep.pass);
    ok = ok && rep.pass;
  }
  if (suite == "bijections" || suite == "all") {
    bool pass = true;
    for (int n = 0; n <= 10 && pass; ++n) {
      core::enumerate_plane_partitions(n, [&](const core::PlanePartition& pp) {
        auto pair = bij::bender_knuth_inverse(pp);
        auto mat = bij::knuth_inverse(pair);
        auto pair2 = bij::knuth_map(mat);
        if (!(pair2.first == pair.first && pair2.second == pair.second &&
              bij::bender_knuth_map(pair) == pp &&
              mat.weight() == pp.weight() &&
              mat.unit_count() == core::conjugate_trace(pp))) {
          pass = false;
          std::cout << "  round trip failed at " << pp.to_json() << "\n";
        }
        return pass;
      });
    }
    banner("bijections", pass);
    ok = ok && pass;
  }
  if (suite == "sampler" || suite == "all") {
    auto rs = rng::RandomSource(20240801);
    auto params = sampler::SamplerParams::tuned(8, 20240801);
    std::map<core::PlanePartition, long long> freq;
    const long long draws = 100000;
    for (long long i = 0; i < draws; ++i) freq[sampler::sample_uniform(params, rs)] += 1;
    long long cells = 0;
    core::enumerate_plane_partitions(8, [&](const core::PlanePartition&) {
      ++cells;
      return true;
    });
    double expect = static_cast<double>(draws) / static_cast<double>(cells);
    double chi2 = 0;
    long long seen = 0;
    for (const auto& [pp, c] : freq) {
      chi2 += (c - expect) * (c - expect) / expect;
      seen += c;
    }
    chi2 += (cells - static_cast<long long>(freq.size())) * expect;
    boost::math::chi_squared_distribution<double> dist(static_cast<double>(cells - 1));
    double threshold = boost::math::quantile(dist, 0.999);
    bool pass = seen == draws && chi2 < threshold;
    std::cout << "  chi-square at n=8 over " << cells << " outcomes: " << chi2
              << " (99.9% threshold " << threshold << ")\n";
    banner("sampler", pass);
    ok = ok && pass;
  }
  if (suite == "prop1" || suite == "all") {
    auto th500 = asym::threshold_m(500, 0);
    auto th2000 = asym::threshold_m(2000, 0);
    auto t500 = series::x_distribution_exact(500, static_cast<int>(th500.m_int));
    auto t2000 = series::x_distribution_exact(2000, static_cast<int>(th2000.m_int));
    bool pass = true;
    for (double y : {0.0, 0.5}) {
      auto a = lab::proposition1_check(t500, 500, y);
      auto b = lab::proposition1_check(t2000, 2000, y);
      std::cout << "  y=" << y << "  gap(500)=" << a.relative_gap
                << "  gap(2000)=" << b.relative_gap << "\n";
      pass = pass && b.relative_gap <= 0.05 && b.relative_gap < a.relative_gap;
    }
    banner("prop1", pass);
    ok = ok && pass;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plane partition statistics laboratory"};
  app.require_subcommand(1);

  // counts
  std::string kind = "q";
  int max_n = 50;
  std::string fmt = "text", out_path, cache_path;
  auto* counts = app.add_subcommand("counts", "exact partition counts");
  counts->add_option("--kind", kind, "p (linear) or q (plane)")
      ->check(CLI::IsMember({"p", "q"}));
  counts->add_option("--max", max_n, "truncation order")->required();
  counts->add_option("--format", fmt, "text|json|csv");
  counts->add_option("--out", out_path, "output path (default stdout)");
  counts->add_option("--cache", cache_path, "also store the table here");

  // enumerate
  int enum_n = 0;
  std::string enum_fmt = "json";
  auto* enumerate = app.add_subcommand("enumerate", "stream all plane partitions of n");
  enumerate->add_option("--n", enum_n, "weight")->required();
  enumerate->add_option("--format", enum_fmt, "json|text");

  // trace-dist
  int trace_max = 20;
  std::string trace_fmt = "text", trace_out;
  auto* tracecmd = app.add_subcommand("trace-dist", "conjugate-trace table T_t(n)");
  tracecmd->add_option("--max", trace_max, "truncation order")->required();
  tracecmd->add_option("--format", trace_fmt, "text|json|csv");
  tracecmd->add_option("--out", trace_out, "output path");

  // xdist
  int x_max = 20, x_m = 0;
  bool x_float = false;
  std::string x_fmt = "text", x_out;
  auto* xdist = app.add_subcommand("xdist", "tail statistic law from Q(x) f_m(x,y)");
  xdist->add_option("--max", x_max, "truncation order")->required();
  xdist->add_option("--m", x_m, "threshold")->required();
  xdist->add_flag("--float", x_float, "scaled floating mode (non-exact)");
  xdist->add_option("--format", x_fmt, "text|json|csv");
  xdist->add_option("--out", x_out, "output path");

  // sample
  long long s_n = 0, s_count = 1, s_m = -1;
  std::uint64_t s_seed = 1;
  int s_workers = 1;
  std::string s_out, s_report;
  auto* sample = app.add_subcommand("sample", "uniform plane partitions of n");
  sample->add_option("--n", s_n, "weight")->required();
  sample->add_option("--count", s_count, "number of samples");
  sample->add_option("--seed", s_seed, "rng seed");
  sample->add_option("--workers", s_workers, "parallel workers");
  sample->add_option("--m", s_m, "emit tail-statistic records at this threshold "
                                 "instead of partitions");
  sample->add_option("--out", s_out, "output path (JSON lines)");
  sample->add_option("--report", s_report, "write the batch report JSON here");

  // asymptotics
  std::string a_grid = "100,1000,10000";
  double a_c = 0;
  std::string a_fmt = "text", a_out;
  auto* asymcmd = app.add_subcommand("asymptotics", "saddle and threshold table");
  asymcmd->add_option("--n-grid", a_grid, "comma-separated n values");
  asymcmd->add_option("--c", a_c, "threshold shift");
  asymcmd->add_option("--format", a_fmt, "text|csv|json");
  asymcmd->add_option("--out", a_out, "output path");

  // experiment
  lab::ExperimentConfig cfg;
  auto* expcmd = app.add_subcommand("experiment", "Poisson experiment report");
  expcmd->add_option("--n", cfg.n, "weight")->required();
  expcmd->add_option("--c", cfg.c, "threshold shift");
  expcmd->add_option("--samples", cfg.samples, "sample count")->required();
  expcmd->add_option("--seed", cfg.seed, "rng seed");
  expcmd->add_option("--workers", cfg.workers, "parallel workers");
  expcmd->add_option("--mode", cfg.mode, "mc|exact|both")
      ->check(CLI::IsMember({"mc", "exact", "both"}));
  expcmd->add_option("--out", cfg.output, "report path (default stdout)");
  expcmd->add_flag("--timing", cfg.timing, "embed wall-clock in the report");

  // verify
  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->add_option("--suite", suite, "identities|bijections|sampler|prop1|all")
      ->check(CLI::IsMember({"identities", "bijections", "sampler", "prop1", "all"}));

  // scan
  std::string scan_grid = "500,1000,2000", scan_ys = "0,0.5", scan_out;
  double scan_c = 0;
  auto* scan = app.add_subcommand("scan", "convergence scan (CSV)");
  scan->add_option("--n-grid", scan_grid, "comma-separated n values")->required();
  scan->add_option("--c", scan_c, "threshold shift");
  scan->add_option("--y-grid", scan_ys, "comma-separated y values");
  scan->add_option("--out", scan_out, "output path");

  // Every subcommand accepts a key=value defaults file. Keys name long
  // options of the invoked subcommand; entries whose flag already appears on
  // the command line are ignored, so explicit flags override the file.
  std::string config_path;
  for (auto* sc : app.get_subcommands({}))
    sc->add_option("--config", config_path, "defaults file (key=value)");

  std::vector<std::string> args(argv + 1, argv + argc);
  for (size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--config") config_path = args[i + 1];
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot read config file " << config_path << "\n";
      return 2;
    }
    auto trim = [](const std::string& s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return (a == std::string::npos) ? std::string{} : s.substr(a, b - a + 1);
    };
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos)
        line = line.substr(0, hash);
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = trim(line.substr(0, eq));
      std::string val = trim(line.substr(eq + 1));
      if (key.empty() || val.empty()) continue;
      std::string flag = "--" + key;
      if (std::find(args.begin(), args.end(), flag) == args.end()) {
        args.push_back(flag);
        args.push_back(val);
      }
    }
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (counts->parsed()) {
      auto s = (kind == "p") ? series::linear_partition_counts(max_n)
                             : series::plane_partition_counts(max_n);
      if (!cache_path.empty())
        lab::cache_store(cache_path, s, kind == "p" ? "linear-counts" : "plane-counts");
      write_output(out_path, series_to_text(s, fmt));
    } else if (enumerate->parsed()) {
      core::enumerate_plane_partitions(enum_n, [&](const core::PlanePartition& pp) {
        if (enum_fmt == "text")
          std::cout << pp.to_text() << "\n";
        else
          std::cout << pp.to_json() << "\n";
        return true;
      });
    } else if (tracecmd->parsed()) {
      write_output(trace_out, table_to_text(series::trace_series(trace_max), trace_fmt));
    } else if (xdist->parsed()) {
      if (x_float) {
        auto t = series::x_distribution_float(x_max, x_m);
        std::ostringstream text;
        text << "# non-exact floating mode\n";
        if (x_fmt == "csv") text << "n,t,probability\n";
        for (int n = 0; n <= t.truncation_order; ++n)
          for (int k = 0; k < static_cast<int>(t.rows[n].size()); ++k)
            text << n << (x_fmt == "csv" ? "," : " ") << k
                 << (x_fmt == "csv" ? "," : " ") << t.rows[n][k] << "\n";
        write_output(x_out, text.str());
      } else {
        if (x_max > lab::kExactBivariateCap)
          std::cerr << "warning: exact tables beyond N=" << lab::kExactBivariateCap
                    << " get slow; consider --float\n";
        write_output(x_out, table_to_text(series::x_distribution_exact(x_max, x_m), x_fmt));
      }
    } else if (sample->parsed()) {
      std::ostringstream lines;
      auto params = sampler::SamplerParams::tuned(s_n, s_seed);
      auto t0 = std::chrono::steady_clock::now();
      long long trials_total = 0;
      long long quota_base = s_count / s_workers;
      for (int w = 0; w < s_workers; ++w) {
        auto rs = rng::RandomSource::worker_stream(s_seed, w);
        long long quota = quota_base + (w < s_count % s_workers ? 1 : 0);
        for (long long i = 0; i < quota; ++i) {
          long long trials = 1;
          auto mat = sampler::sample_uniform_matrix(params, rs, &trials);
          trials_total += trials;
          if (s_m >= 0) {
            json rec;
            rec["x"] = mat.units_above(s_m);
            lines << rec.dump() << "\n";
          } else {
            lines << bij::bender_knuth_map(bij::knuth_map(mat)).to_json() << "\n";
          }
        }
      }
      double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      json report;
      report["n"] = s_n;
      report["u"] = params.u;
      report["requested_samples"] = s_count;
      report["trials_used"] = trials_total;
      report["acceptance_rate"] =
          static_cast<double>(s_count) / static_cast<double>(trials_total);
      report["elapsed_seconds"] = elapsed;
      if (s_report.empty())
        std::cerr << report.dump() << "\n";
      else
        write_output(s_report, report.dump(2));
      write_output(s_out, lines.str());
    } else if (asymcmd->parsed()) {
      auto grid = parse_grid(a_grid);
      std::ostringstream text;
      json jrows = json::array();
      if (a_fmt != "json")
        text << (a_fmt == "csv"
                     ? "n,d_expansion,d_exact,delta,u,m_real,m_int,wright,hardy_ramanujan\n"
                     : "");
      for (double n : grid) {
        auto sd = asym::saddle_data(n);
        auto th = asym::threshold_m(n, a_c);
        // the estimates overflow double quickly; keep them as strings
        std::string wright = asym::wright_estimate(n).str(8, std::ios_base::scientific);
        std::string hr =
            asym::hardy_ramanujan_estimate(n).str(8, std::ios_base::scientific);
        if (a_fmt == "json") {
          json j;
          j["n"] = n;
          j["d_expansion"] = to_double(sd.d_expansion);
          j["d_exact"] = to_double(sd.d_exact);
          j["delta"] = to_double(sd.delta);
          j["u"] = to_double(sd.u);
          j["m_real"] = to_double(th.m_real);
          j["m_int"] = th.m_int;
          j["wright"] = wright;
          j["hardy_ramanujan"] = hr;
          jrows.push_back(j);
        } else {
          const char* sep = (a_fmt == "csv") ? "," : "  ";
          if (a_fmt == "text") text << "n=";
          text << n << sep << to_double(sd.d_expansion) << sep << to_double(sd.d_exact)
               << sep << to_double(sd.delta) << sep << to_double(sd.u) << sep
               << to_double(th.m_real) << sep << th.m_int << sep << wright << sep << hr
               << "\n";
        }
      }
      write_output(a_out, a_fmt == "json" ? jrows.dump(1) : text.str());
    } else if (expcmd->parsed()) {
      auto rep = lab::run_poisson_experiment(cfg);
      std::cerr << "experiment finished in " << rep.runtime_seconds << " s\n";
      write_output(cfg.output, rep.to_json(cfg.timing));
    } else if (verify->parsed()) {
      return run_verify(suite);
    } else if (scan->parsed()) {
      auto rows = lab::convergence_scan(parse_grid(scan_grid), scan_c, parse_grid(scan_ys));
      write_output(scan_out, lab::scan_to_csv(rows));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
