#include <doctest.h>

#include <functional>
#include <set>

#include "pplab/bijections.hpp"
#include "pplab/partition.hpp"
#include "pplab/series.hpp"

using namespace pplab;
using bij::ColumnStrictPair;
using bij::CorrespondenceMatrix;
using core::PlanePartition;

// Enumerates every matrix of the given weight by distributing units over the
// cells (j, k), visited class by class.
static void enumerate_matrices(int weight,
                               const std::function<void(const CorrespondenceMatrix&)>& fn) {
  std::vector<std::pair<int, int>> cells;
  for (int w = 1; w <= weight; ++w)
    for (int j = 1; j <= w; ++j) cells.emplace_back(j, w - j + 1);
  std::function<void(size_t, int, const CorrespondenceMatrix&)> rec =
      [&](size_t i, int rem, const CorrespondenceMatrix& acc) {
        if (rem == 0) {
          fn(acc);
          return;
        }
        if (i == cells.size()) return;
        auto [j, k] = cells[i];
        int w = j + k - 1;
        for (int cnt = 0; cnt * w <= rem; ++cnt) {
          CorrespondenceMatrix next = acc;
          if (cnt) next.add(j, k, cnt);
          rec(i + 1, rem - cnt * w, next);
        }
      };
  rec(0, weight, CorrespondenceMatrix{});
}

TEST_CASE("trivial correspondences") {
  CorrespondenceMatrix zero;
  auto pair = bij::knuth_map(zero);
  CHECK(pair.first.weight() == 0);
  CHECK(pair.second.weight() == 0);
  CHECK(bij::knuth_inverse(pair) == zero);
  CHECK(bij::bender_knuth_map(pair).weight() == 0);
  CHECK(bij::bender_knuth_inverse(PlanePartition{}).first.weight() == 0);

  CorrespondenceMatrix unit;
  unit.add(1, 1, 1);
  auto p1 = bij::knuth_map(unit);
  CHECK(p1.first.rows() == std::vector<std::vector<int>>{{1}});
  CHECK(p1.second.rows() == std::vector<std::vector<int>>{{1}});
  auto pp1 = bij::bender_knuth_map(p1);
  CHECK(pp1.rows() == std::vector<std::vector<int>>{{1}});
  CHECK(core::conjugate_trace(pp1) == 1);
}

TEST_CASE("knuth content and round trip over all matrices of weight <= 8") {
  for (int n = 0; n <= 8; ++n) {
    enumerate_matrices(n, [&](const CorrespondenceMatrix& m) {
      auto pair = bij::knuth_map(m);
      CHECK(bij::is_column_strict(pair.first));
      CHECK(bij::is_column_strict(pair.second));
      CHECK(pair.first.shape() == pair.second.shape());
      // content contracts: k appears in first sum_j b_{jk} times, in second
      // sum_j b_{kj} times
      std::map<int, long long> col_sums, row_sums, c1, c2;
      for (const auto& [jk, b] : m.entries()) {
        row_sums[jk.first] += b;
        col_sums[jk.second] += b;
      }
      for (const auto& row : pair.first.rows())
        for (int v : row) c1[v] += 1;
      for (const auto& row : pair.second.rows())
        for (int v : row) c2[v] += 1;
      CHECK(c1 == col_sums);
      CHECK(c2 == row_sums);
      CHECK(pair.first.part_count() == m.unit_count());
      CHECK(bij::knuth_inverse(pair) == m);
      return;
    });
  }
}

TEST_CASE("composite chain is a weight-preserving bijection") {
  auto tr = series::trace_series(8);
  auto q = series::plane_partition_counts(8);
  for (int n = 0; n <= 8; ++n) {
    std::set<PlanePartition> images;
    std::map<long long, long long> trace_hist;
    long long matrices = 0;
    enumerate_matrices(n, [&](const CorrespondenceMatrix& m) {
      ++matrices;
      auto pp = bij::bender_knuth_map(bij::knuth_map(m));
      CHECK(pp.weight() == m.weight());
      CHECK(core::conjugate_trace(pp) == m.unit_count());
      images.insert(pp);
      trace_hist[core::conjugate_trace(pp)] += 1;
    });
    CHECK(BigInt(matrices) == q.at(n));
    CHECK(BigInt(static_cast<long long>(images.size())) == q.at(n));  // injective
    for (const auto& [t, c] : trace_hist)
      CHECK(tr.entry(n, static_cast<int>(t)) == c);
  }
}

TEST_CASE("diagonal split contracts and round trip for weights <= 10") {
  for (int n = 0; n <= 10; ++n) {
    core::enumerate_plane_partitions(n, [&](const PlanePartition& pp) {
      auto pair = bij::bender_knuth_inverse(pp);
      CHECK(bij::is_column_strict(pair.first));
      CHECK(bij::is_column_strict(pair.second));
      CHECK(pair.first.shape() == pair.second.shape());
      long long t = core::conjugate_trace(pp);
      CHECK(pair.first.part_count() == t);
      CHECK(pair.first.weight() + pair.second.weight() - t == n);
      CHECK(pair.first.largest_part() == pp.largest_part());
      CHECK(pair.second.largest_part() == pp.row_count());
      CHECK(bij::bender_knuth_map(pair) == pp);
      // full chain round trip
      auto mat = bij::knuth_inverse(pair);
      auto pair2 = bij::knuth_map(mat);
      CHECK(pair2.first == pair.first);
      CHECK(pair2.second == pair.second);
      return true;
    });
  }
}

TEST_CASE("invalid pairs are rejected") {
  auto cs = [](std::vector<std::vector<int>> rows) {
    return core::PlanePartition::from_rows(rows);
  };
  ColumnStrictPair shape_mismatch{cs({{2, 1}}), cs({{2}, {1}})};
  CHECK_THROWS_AS(bij::knuth_inverse(shape_mismatch), std::invalid_argument);
  CHECK_THROWS_AS(bij::bender_knuth_map(shape_mismatch), std::invalid_argument);
  // valid plane partition but not column-strict (equal entries in a column)
  ColumnStrictPair not_strict{cs({{1}, {1}}), cs({{2}, {1}})};
  CHECK_THROWS_AS(bij::knuth_inverse(not_strict), std::invalid_argument);
}

TEST_CASE("matrix serialization trims trailing zeros") {
  CorrespondenceMatrix m;
  m.add(1, 2, 3);
  m.add(2, 1, 1);
  CHECK(m.to_json() == "[[0,3],[1]]");
  auto dense = m.to_dense();
  CHECK(CorrespondenceMatrix::from_dense(dense) == m);
  CHECK(m.weight() == 3 * 2 + 2);
  CHECK(m.units_above(1) == 4);
  CHECK(m.units_above(2) == 0);
}
