#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pplab::core {

// A linear integer partition: parts in non-increasing order, all positive.
class LinearPartition {
 public:
  LinearPartition() = default;
  explicit LinearPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  long long weight() const;
  int part(int i) const {  // 1-based, 0 beyond the end
    return (i >= 1 && i <= size()) ? parts_[i - 1] : 0;
  }
  bool operator==(const LinearPartition& o) const = default;

 private:
  std::vector<int> parts_;
};

LinearPartition conjugate_linear(const LinearPartition& lam);

// A plane partition: rows non-increasing left to right, columns non-increasing
// top to bottom, only positive entries stored (zeros stripped).
class PlanePartition {
 public:
  PlanePartition() = default;

  // Throws std::invalid_argument on a monotonicity violation. Zeros inside
  // rows and empty trailing rows are stripped first.
  static PlanePartition from_rows(const std::vector<std::vector<int>>& rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(int h, int j) const {  // 1-based, 0 outside
    if (h < 1 || h > static_cast<int>(rows_.size())) return 0;
    const auto& r = rows_[h - 1];
    return (j >= 1 && j <= static_cast<int>(r.size())) ? r[j - 1] : 0;
  }
  long long weight() const;
  int row_count() const { return static_cast<int>(rows_.size()); }
  int largest_part() const { return rows_.empty() ? 0 : rows_[0][0]; }
  long long part_count() const;
  LinearPartition shape() const;
  std::vector<std::vector<int>> columns() const;

  std::string to_text() const;   // whitespace-aligned rows
  std::string to_json() const;   // [[5,4,1,1],[3,2,1],[2,1]]

  bool operator==(const PlanePartition& o) const = default;
  bool operator<(const PlanePartition& o) const { return rows_ < o.rows_; }

 private:
  friend PlanePartition unchecked_plane_partition(std::vector<std::vector<int>> rows);
  std::vector<std::vector<int>> rows_;
};

// Trusted constructor for internal generators that produce valid rows.
PlanePartition unchecked_plane_partition(std::vector<std::vector<int>> rows);

struct ValidationResult {
  bool ok = false;
  PlanePartition value;       // valid iff ok
  std::string error;          // names the first failing cell when !ok
  int bad_row = 0, bad_col = 0;  // 1-based position of the violation
};

// Non-throwing validation; reports the first failing (h, j).
ValidationResult validate_plane_partition(const std::vector<std::vector<int>>& raw);

// Number of parts with entry(h,j) >= h.
long long conjugate_trace(const PlanePartition& pp);

// Sum of the main-diagonal entries.
long long trace(const PlanePartition& pp);

// Replace each row by its conjugate partition. An involution; preserves the
// weight and row count, and swaps trace with conjugate trace.
PlanePartition row_conjugate_aspect(const PlanePartition& pp);

// Y_k: number of parts equal to k lying in rows h <= k.
std::map<int, long long> part_counts(const PlanePartition& pp);

// Number of parts with entry >= h and entry > m (strict; real m allowed).
long long x_statistic(const PlanePartition& pp, double m);

// For each qualifying cell (h, j) with entry >= h, its column depth is
// #{h' >= h : entry(h', j) >= h}; returns depth -> count. The total over all
// depths is the conjugate trace. This is the statistic whose joint generating
// function over restricted partitions factors as
// prod_{k<=l} prod_{j<=r} (1 - y_j x^{k+j-1})^{-1}.
std::map<int, long long> column_depth_counts(const PlanePartition& pp);

inline constexpr int kEnumerationCap = 30;

// Visits every plane partition of n exactly once. Order: depth-first over
// rows; candidate rows are produced in decreasing weight and, within a
// weight, in decreasing lexicographic order, subject to fitting under the
// previous row. The callback returns false to stop early; the function
// returns the number of partitions visited.
long long enumerate_plane_partitions(
    int n, const std::function<bool(const PlanePartition&)>& visit);

// Same stream restricted to at most r rows and largest part at most l.
long long enumerate_restricted(
    int n, int r, int l, const std::function<bool(const PlanePartition&)>& visit);

}  // namespace pplab::core
