#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pplab/bijections.hpp"
#include "pplab/partition.hpp"
#include "pplab/rng.hpp"

namespace pplab::sampler {

// Boltzmann tuning for a target weight. Cells of diagonal weight w carry the
// geometric parameter u^w; only classes with w <= class_cutoff are sampled.
// With class_cutoff = n the exact-size conditional law is unaffected, since
// heavier classes cannot appear in an accepted draw.
struct SamplerParams {
  long long n = 0;
  double u = 0.0;
  int class_cutoff = 0;
  std::uint64_t seed = 0;

  // u = e^{-d_n} with d_n solved from the saddle equation; cutoff = n.
  static SamplerParams tuned(long long n, std::uint64_t seed);
};

struct SampleBatchReport {
  long long n = 0;
  double u = 0.0;
  long long requested = 0;  // trials used
  long long accepted = 0;
  double acceptance_rate = 0.0;
  double wilson_low = 0.0, wilson_high = 0.0;  // 99% interval
  double elapsed_seconds = 0.0;
};

// Totals per diagonal-weight class, independent NB(w, u^w) per class.
// Classes are visited in increasing w; when abort_above is set the draw stops
// early once the accumulated weight exceeds it (the partial vector is
// returned and total reports the overshoot).
struct ClassDraw {
  std::vector<long long> totals;  // index w-1
  long long total_weight = 0;
};
ClassDraw boltzmann_class_totals(const SamplerParams& params, rng::RandomSource& rs,
                                 std::optional<long long> abort_above = std::nullopt);

// Matrix with independent geometric entries, P(b_{jk} = s) proportional to
// u^{(j+k-1)s}: class totals are drawn first, then placed uniformly among the
// w cells of each class (a uniform weak composition).
bij::CorrespondenceMatrix boltzmann_matrix(const SamplerParams& params,
                                           rng::RandomSource& rs);

// Places already-drawn class totals uniformly within their classes.
bij::CorrespondenceMatrix place_class_totals(const std::vector<long long>& totals,
                                             rng::RandomSource& rs);

// Rejection to exact weight n; the conditioned matrix is uniform over the
// weight-n matrices, hence its image is uniform over the plane partitions.
bij::CorrespondenceMatrix sample_uniform_matrix(const SamplerParams& params,
                                                rng::RandomSource& rs,
                                                long long* trials = nullptr);

core::PlanePartition sample_uniform(long long n, rng::RandomSource& rs);
core::PlanePartition sample_uniform(const SamplerParams& params, rng::RandomSource& rs);

// Oracle sampler: uniform index into the canonical enumeration stream.
core::PlanePartition sample_exhaustive_uniform(int n, rng::RandomSource& rs);

// Batch variant that draws all indices first and resolves them in one
// enumeration pass.
std::vector<core::PlanePartition> sample_exhaustive_batch(int n, long long count,
                                                          rng::RandomSource& rs);

// Empirical acceptance rate of the exact-size rejection at the tuned u.
SampleBatchReport acceptance_probe(long long n, long long trials, rng::RandomSource& rs);
SampleBatchReport acceptance_probe(const SamplerParams& params, long long trials,
                                   rng::RandomSource& rs);

}  // namespace pplab::sampler
