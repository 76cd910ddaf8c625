#pragma once

#include <map>
#include <string>
#include <vector>

#include "pplab/partition.hpp"

namespace pplab::bij {

// Sparse matrix (b_{jk})_{j,k>=1} of non-negative integers. The diagonal
// weight of cell (j,k) is j+k-1; the matrix weight is sum (j+k-1) b_{jk}.
class CorrespondenceMatrix {
 public:
  CorrespondenceMatrix() = default;

  void add(int j, int k, long long count);
  long long at(int j, int k) const;
  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }

  long long weight() const;
  long long unit_count() const;                 // sum of all b_{jk}
  std::map<int, long long> class_totals() const;  // diagonal weight -> units
  long long units_above(long long m) const;     // units with j+k-1 > m

  // Dense rows with trailing zero rows/columns trimmed.
  std::vector<std::vector<long long>> to_dense() const;
  static CorrespondenceMatrix from_dense(const std::vector<std::vector<long long>>& rows);
  std::string to_json() const;

  bool operator==(const CorrespondenceMatrix& o) const { return entries_ == o.entries_; }

 private:
  std::map<std::pair<int, int>, long long> entries_;
};

// Pair of column-strict plane partitions of the same shape. Column-strict:
// rows weakly decreasing, positive column entries strictly decreasing.
struct ColumnStrictPair {
  core::PlanePartition first;   // entry counts tied to matrix column sums
  core::PlanePartition second;  // entry counts tied to matrix row sums
};

bool is_column_strict(const core::PlanePartition& pp);

// Throws std::invalid_argument when the pair is not a valid input
// (shape mismatch or a column-strictness violation).
void validate_pair(const ColumnStrictPair& p);

// Row-insertion correspondence between matrices and column-strict pairs:
// k appears in `first` exactly sum_j b_{jk} times, k appears in `second`
// exactly sum_j b_{kj} times, and both have sum b_{jk} parts.
ColumnStrictPair knuth_map(const CorrespondenceMatrix& m);
CorrespondenceMatrix knuth_inverse(const ColumnStrictPair& p);

// Diagonal-splitting correspondence between column-strict pairs and plane
// partitions: each column of the output, read as a linear partition, has
// Frobenius arms given by a column of `first` and legs by the matching
// column of `second` (both including the diagonal cell). Consequences:
// |omega| = n1 + n2 - t, conjugate_trace(omega) = t = parts in each half,
// largest part of `first` = largest part of omega, largest part of `second`
// = row count of omega.
core::PlanePartition bender_knuth_map(const ColumnStrictPair& p);
ColumnStrictPair bender_knuth_inverse(const core::PlanePartition& pp);

}  // namespace pplab::bij
