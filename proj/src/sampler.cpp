#include "pplab/sampler.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "pplab/asymptotics.hpp"

namespace pplab::sampler {

SamplerParams SamplerParams::tuned(long long n, std::uint64_t seed) {
  SamplerParams p;
  p.n = n;
  p.seed = seed;
  p.u = (n == 0) ? 0.0 : std::exp(-to_double(asym::saddle_exact(static_cast<double>(n))));
  p.class_cutoff = static_cast<int>(n);
  return p;
}

namespace {

// Per-class sampling data: geometric ratio q = u^w and P(total = 0) = (1-q)^w.
struct ClassModel {
  std::vector<double> q;
  std::vector<double> p0;
};

ClassModel build_model(const SamplerParams& params) {
  ClassModel m;
  m.q.resize(params.class_cutoff + 1, 0.0);
  m.p0.resize(params.class_cutoff + 1, 1.0);
  double uw = 1.0;
  for (int w = 1; w <= params.class_cutoff; ++w) {
    uw *= params.u;
    m.q[w] = uw;
    m.p0[w] = std::pow(1.0 - uw, w);
    if (uw == 0.0) break;  // deeper classes are inert
  }
  return m;
}

// NB(w, q) by inverse-CDF walk; P(s+1)/P(s) = q (w+s)/(s+1).
long long draw_class_total(const ClassModel& m, int w, rng::RandomSource& rs) {
  double q = m.q[w];
  if (q <= 0.0) return 0;
  double un = rs.uniform01();
  double pr = m.p0[w];
  double cum = pr;
  long long s = 0;
  while (un > cum) {
    pr *= q * static_cast<double>(w + s) / static_cast<double>(s + 1);
    ++s;
    cum += pr;
    if (pr < 1e-320) break;  // safeguards against a stuck walk in the far tail
  }
  return s;
}

}  // namespace

ClassDraw boltzmann_class_totals(const SamplerParams& params, rng::RandomSource& rs,
                                 std::optional<long long> abort_above) {
  static thread_local ClassModel cached;
  static thread_local double cached_u = -1.0;
  static thread_local int cached_cutoff = -1;
  if (cached_u != params.u || cached_cutoff != params.class_cutoff) {
    cached = build_model(params);
    cached_u = params.u;
    cached_cutoff = params.class_cutoff;
  }
  ClassDraw out;
  out.totals.assign(params.class_cutoff, 0);
  for (int w = 1; w <= params.class_cutoff; ++w) {
    long long s = draw_class_total(cached, w, rs);
    if (s) {
      out.totals[w - 1] = s;
      out.total_weight += static_cast<long long>(w) * s;
      if (abort_above && out.total_weight > *abort_above) return out;
    }
  }
  return out;
}

bij::CorrespondenceMatrix place_class_totals(const std::vector<long long>& totals,
                                             rng::RandomSource& rs) {
  bij::CorrespondenceMatrix mat;
  for (int w = 1; w <= static_cast<int>(totals.size()); ++w) {
    long long s = totals[w - 1];
    if (!s) continue;
    if (w == 1) {
      mat.add(1, 1, s);
      continue;
    }
    // Uniform weak composition of s into w cells: choose w-1 distinct bar
    // positions among s+w-1 slots (Floyd), gaps give the cell counts.
    std::vector<long long> bars;
    bars.reserve(w - 1);
    long long total_slots = s + w - 1;
    for (long long t = total_slots - (w - 1) + 1; t <= total_slots; ++t) {
      long long pick = 1 + static_cast<long long>(rs.uniform_below(static_cast<std::uint64_t>(t)));
      if (std::find(bars.begin(), bars.end(), pick) != bars.end())
        bars.push_back(t);
      else
        bars.push_back(pick);
    }
    std::sort(bars.begin(), bars.end());
    long long prev = 0;
    for (int i = 1; i <= w; ++i) {
      long long bar = (i < w) ? bars[i - 1] : total_slots + 1;
      long long cells = bar - prev - 1;
      if (cells > 0) mat.add(i, w + 1 - i, cells);
      prev = bar;
    }
  }
  return mat;
}

bij::CorrespondenceMatrix boltzmann_matrix(const SamplerParams& params,
                                           rng::RandomSource& rs) {
  auto draw = boltzmann_class_totals(params, rs);
  return place_class_totals(draw.totals, rs);
}

bij::CorrespondenceMatrix sample_uniform_matrix(const SamplerParams& params,
                                                rng::RandomSource& rs, long long* trials) {
  long long used = 0;
  for (;;) {
    ++used;
    auto draw = boltzmann_class_totals(params, rs, params.n);
    if (draw.total_weight == params.n) {
      if (trials) *trials = used;
      return place_class_totals(draw.totals, rs);
    }
  }
}

core::PlanePartition sample_uniform(const SamplerParams& params, rng::RandomSource& rs) {
  if (params.n == 0) return core::PlanePartition{};
  auto mat = sample_uniform_matrix(params, rs);
  return bij::bender_knuth_map(bij::knuth_map(mat));
}

core::PlanePartition sample_uniform(long long n, rng::RandomSource& rs) {
  return sample_uniform(SamplerParams::tuned(n, 0), rs);
}

core::PlanePartition sample_exhaustive_uniform(int n, rng::RandomSource& rs) {
  auto batch = sample_exhaustive_batch(n, 1, rs);
  return batch.front();
}

std::vector<core::PlanePartition> sample_exhaustive_batch(int n, long long count,
                                                          rng::RandomSource& rs) {
  if (n > core::kEnumerationCap)
    throw std::invalid_argument("exhaustive sampler limited to weights <= " +
                                std::to_string(core::kEnumerationCap));
  long long total = core::enumerate_plane_partitions(n, [](const core::PlanePartition&) {
    return true;
  });
  std::vector<std::pair<long long, long long>> want(count);  // (index, slot)
  for (long long i = 0; i < count; ++i)
    want[i] = {static_cast<long long>(rs.uniform_below(static_cast<std::uint64_t>(total))), i};
  std::sort(want.begin(), want.end());
  std::vector<core::PlanePartition> out(count);
  long long pos = 0;
  size_t next = 0;
  core::enumerate_plane_partitions(n, [&](const core::PlanePartition& pp) {
    while (next < want.size() && want[next].first == pos) {
      out[want[next].second] = pp;
      ++next;
    }
    ++pos;
    return next < want.size();
  });
  return out;
}

SampleBatchReport acceptance_probe(const SamplerParams& params, long long trials,
                                   rng::RandomSource& rs) {
  if (trials < 1) throw std::invalid_argument("acceptance_probe requires trials >= 1");
  auto t0 = std::chrono::steady_clock::now();
  long long hits = 0;
  for (long long i = 0; i < trials; ++i) {
    auto draw = boltzmann_class_totals(params, rs, params.n);
    if (draw.total_weight == params.n) ++hits;
  }
  SampleBatchReport rep;
  rep.n = params.n;
  rep.u = params.u;
  rep.requested = trials;
  rep.accepted = hits;
  rep.acceptance_rate = static_cast<double>(hits) / static_cast<double>(trials);
  const double z = 2.5758293035489004;  // 99%
  double nh = static_cast<double>(trials);
  double ph = rep.acceptance_rate;
  double denom = 1.0 + z * z / nh;
  double center = (ph + z * z / (2 * nh)) / denom;
  double half = z * std::sqrt(ph * (1 - ph) / nh + z * z / (4 * nh * nh)) / denom;
  rep.wilson_low = std::max(0.0, center - half);
  rep.wilson_high = std::min(1.0, center + half);
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

SampleBatchReport acceptance_probe(long long n, long long trials, rng::RandomSource& rs) {
  return acceptance_probe(SamplerParams::tuned(n, 0), trials, rs);
}

}  // namespace pplab::sampler
