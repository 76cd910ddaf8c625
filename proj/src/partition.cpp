#include "pplab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pplab::core {

LinearPartition::LinearPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("linear partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("linear partition parts must be non-increasing");
  }
}

long long LinearPartition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

LinearPartition conjugate_linear(const LinearPartition& lam) {
  if (lam.size() == 0) return LinearPartition{};
  std::vector<int> conj(lam.parts()[0], 0);
  for (int p : lam.parts())
    for (int j = 0; j < p; ++j) conj[j] += 1;
  return LinearPartition(std::move(conj));
}

PlanePartition unchecked_plane_partition(std::vector<std::vector<int>> rows) {
  PlanePartition pp;
  pp.rows_ = std::move(rows);
  return pp;
}

static std::vector<std::vector<int>> strip_zeros(
    const std::vector<std::vector<int>>& raw) {
  std::vector<std::vector<int>> rows;
  for (const auto& r : raw) {
    std::vector<int> row;
    for (int v : r) {
      if (v != 0) row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return rows;
}

ValidationResult validate_plane_partition(const std::vector<std::vector<int>>& raw) {
  ValidationResult res;
  for (size_t h = 0; h < raw.size(); ++h)
    for (size_t j = 0; j < raw[h].size(); ++j)
      if (raw[h][j] < 0) {
        res.error = "negative entry at (" + std::to_string(h + 1) + "," +
                    std::to_string(j + 1) + ")";
        res.bad_row = static_cast<int>(h + 1);
        res.bad_col = static_cast<int>(j + 1);
        return res;
      }
  auto rows = strip_zeros(raw);
  // Zeros may only pad the tail of a row: a zero with a positive entry to its
  // right is a row-order violation in the raw array.
  for (size_t h = 0; h < raw.size(); ++h) {
    bool seen_zero = false;
    for (size_t j = 0; j < raw[h].size(); ++j) {
      if (raw[h][j] == 0) seen_zero = true;
      else if (seen_zero) {
        res.error = "row order violation at (" + std::to_string(h + 1) + "," +
                    std::to_string(j + 1) + ")";
        res.bad_row = static_cast<int>(h + 1);
        res.bad_col = static_cast<int>(j + 1);
        return res;
      }
    }
  }
  for (size_t h = 0; h < rows.size(); ++h) {
    for (size_t j = 0; j + 1 < rows[h].size(); ++j)
      if (rows[h][j] < rows[h][j + 1]) {
        res.error = "row order violation at (" + std::to_string(h + 1) + "," +
                    std::to_string(j + 2) + ")";
        res.bad_row = static_cast<int>(h + 1);
        res.bad_col = static_cast<int>(j + 2);
        return res;
      }
    if (h + 1 < rows.size()) {
      if (rows[h + 1].size() > rows[h].size()) {
        res.error = "column order violation at (" + std::to_string(h + 2) + "," +
                    std::to_string(rows[h].size() + 1) + ")";
        res.bad_row = static_cast<int>(h + 2);
        res.bad_col = static_cast<int>(rows[h].size() + 1);
        return res;
      }
      for (size_t j = 0; j < rows[h + 1].size(); ++j)
        if (rows[h + 1][j] > rows[h][j]) {
          res.error = "column order violation at (" + std::to_string(h + 2) +
                      "," + std::to_string(j + 1) + ")";
          res.bad_row = static_cast<int>(h + 2);
          res.bad_col = static_cast<int>(j + 1);
          return res;
        }
    }
  }
  res.ok = true;
  res.value = unchecked_plane_partition(std::move(rows));
  return res;
}

PlanePartition PlanePartition::from_rows(const std::vector<std::vector<int>>& rows) {
  auto res = validate_plane_partition(rows);
  if (!res.ok) throw std::invalid_argument("invalid plane partition: " + res.error);
  return res.value;
}

long long PlanePartition::weight() const {
  long long n = 0;
  for (const auto& r : rows_)
    for (int v : r) n += v;
  return n;
}

long long PlanePartition::part_count() const {
  long long s = 0;
  for (const auto& r : rows_) s += static_cast<long long>(r.size());
  return s;
}

LinearPartition PlanePartition::shape() const {
  std::vector<int> lens;
  for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
  return LinearPartition(std::move(lens));
}

std::vector<std::vector<int>> PlanePartition::columns() const {
  std::vector<std::vector<int>> cols;
  if (rows_.empty()) return cols;
  cols.resize(rows_[0].size());
  for (const auto& r : rows_)
    for (size_t j = 0; j < r.size(); ++j) cols[j].push_back(r[j]);
  return cols;
}

std::string PlanePartition::to_text() const {
  std::ostringstream out;
  int width = 1;
  if (!rows_.empty()) width = static_cast<int>(std::to_string(rows_[0][0]).size());
  for (const auto& r : rows_) {
    for (size_t j = 0; j < r.size(); ++j) {
      std::string cell = std::to_string(r[j]);
      if (j) out << ' ';
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

std::string PlanePartition::to_json() const {
  std::ostringstream out;
  out << '[';
  for (size_t h = 0; h < rows_.size(); ++h) {
    if (h) out << ',';
    out << '[';
    for (size_t j = 0; j < rows_[h].size(); ++j) {
      if (j) out << ',';
      out << rows_[h][j];
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

long long conjugate_trace(const PlanePartition& pp) {
  long long t = 0;
  const auto& rows = pp.rows();
  for (size_t h = 0; h < rows.size(); ++h)
    for (int v : rows[h])
      if (v >= static_cast<int>(h + 1)) ++t;
  return t;
}

long long trace(const PlanePartition& pp) {
  long long t = 0;
  for (int h = 1; h <= pp.row_count(); ++h) t += pp.entry(h, h);
  return t;
}

PlanePartition row_conjugate_aspect(const PlanePartition& pp) {
  std::vector<std::vector<int>> rows;
  for (const auto& r : pp.rows())
    rows.push_back(conjugate_linear(LinearPartition(r)).parts());
  return unchecked_plane_partition(std::move(rows));
}

std::map<int, long long> part_counts(const PlanePartition& pp) {
  std::map<int, long long> y;
  const auto& rows = pp.rows();
  for (size_t h = 0; h < rows.size(); ++h)
    for (int v : rows[h])
      if (v >= static_cast<int>(h + 1)) y[v] += 1;
  return y;
}

long long x_statistic(const PlanePartition& pp, double m) {
  long long x = 0;
  const auto& rows = pp.rows();
  for (size_t h = 0; h < rows.size(); ++h)
    for (int v : rows[h])
      if (v >= static_cast<int>(h + 1) && static_cast<double>(v) > m) ++x;
  return x;
}

std::map<int, long long> column_depth_counts(const PlanePartition& pp) {
  std::map<int, long long> d;
  for (const auto& col : pp.columns()) {
    // col is strictly positive and non-increasing down the column
    for (int h = 1; h <= static_cast<int>(col.size()); ++h) {
      if (col[h - 1] < h) break;  // cells below never qualify again
      int depth = 0;
      for (int hp = h; hp <= static_cast<int>(col.size()); ++hp)
        if (col[hp - 1] >= h) ++depth;
      d[depth] += 1;
    }
  }
  return d;
}

namespace {

// Emits all rows of weight w fitting under `bound` (entrywise, length), in
// decreasing lexicographic order, then recurses on the remaining weight.
struct Enumerator {
  int max_rows;
  int max_part;
  const std::function<bool(const PlanePartition&)>* visit;
  std::vector<std::vector<int>> stack;
  long long count = 0;
  bool stopped = false;

  bool emit() {
    ++count;
    return (*visit)(unchecked_plane_partition(stack));
  }

  // Builds one row part by part. `cap` bounds the current part (previous part
  // in this row and the entry above), `col` is the 1-based column index.
  void row_parts(int remaining_in_row, int col, int cap, int total_left) {
    if (stopped) return;
    if (remaining_in_row == 0) {
      descend(total_left);
      return;
    }
    for (int v = std::min({remaining_in_row, cap, above_bound(col)}); v >= 1; --v) {
      stack.back().push_back(v);
      row_parts(remaining_in_row - v, col + 1, v, total_left);
      stack.back().pop_back();
      if (stopped) return;
    }
  }

  int above_bound(int col) const {
    if (stack.size() < 2) return max_part;
    const auto& above = stack[stack.size() - 2];
    if (col > static_cast<int>(above.size())) return 0;
    return above[col - 1];
  }

  void descend(int total_left) {
    if (stopped) return;
    if (total_left == 0) {
      if (!emit()) stopped = true;
      return;
    }
    if (static_cast<int>(stack.size()) >= max_rows) return;
    // upper bound for the next row's weight: sum of the row above
    int bound = total_left;
    if (!stack.empty()) {
      long long row_sum = 0;
      for (int v : stack.back()) row_sum += v;
      bound = static_cast<int>(std::min<long long>(row_sum, total_left));
    }
    for (int w = bound; w >= 1; --w) {
      stack.emplace_back();
      row_parts(w, 1, std::min(w, max_part), total_left - w);
      stack.pop_back();
      if (stopped) return;
    }
  }
};

}  // namespace

long long enumerate_restricted(
    int n, int r, int l, const std::function<bool(const PlanePartition&)>& visit) {
  if (n < 0) throw std::invalid_argument("weight must be non-negative");
  if (n > kEnumerationCap)
    throw std::invalid_argument("enumeration supports weights up to " +
                                std::to_string(kEnumerationCap) + ", got " +
                                std::to_string(n));
  if (r < 1 || l < 1) throw std::invalid_argument("row/part bounds must be >= 1");
  Enumerator e;
  e.max_rows = r;
  e.max_part = l;
  e.visit = &visit;
  if (n == 0) {
    e.emit();
    return e.count;
  }
  e.descend(n);
  return e.count;
}

long long enumerate_plane_partitions(
    int n, const std::function<bool(const PlanePartition&)>& visit) {
  if (n < 0) throw std::invalid_argument("weight must be non-negative");
  if (n > kEnumerationCap)
    throw std::invalid_argument("enumeration supports weights up to " +
                                std::to_string(kEnumerationCap) + ", got " +
                                std::to_string(n));
  return enumerate_restricted(n, std::max(n, 1), std::max(n, 1), visit);
}

}  // namespace pplab::core
