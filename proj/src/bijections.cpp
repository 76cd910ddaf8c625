#include "pplab/bijections.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pplab::bij {

using core::PlanePartition;

void CorrespondenceMatrix::add(int j, int k, long long count) {
  if (j < 1 || k < 1) throw std::invalid_argument("matrix indices are 1-based");
  if (count < 0) throw std::invalid_argument("matrix entries are non-negative");
  if (count == 0) return;
  entries_[{j, k}] += count;
}

long long CorrespondenceMatrix::at(int j, int k) const {
  auto it = entries_.find({j, k});
  return it == entries_.end() ? 0 : it->second;
}

long long CorrespondenceMatrix::weight() const {
  long long w = 0;
  for (const auto& [jk, b] : entries_) w += static_cast<long long>(jk.first + jk.second - 1) * b;
  return w;
}

long long CorrespondenceMatrix::unit_count() const {
  long long t = 0;
  for (const auto& [jk, b] : entries_) t += b;
  return t;
}

std::map<int, long long> CorrespondenceMatrix::class_totals() const {
  std::map<int, long long> c;
  for (const auto& [jk, b] : entries_) c[jk.first + jk.second - 1] += b;
  return c;
}

long long CorrespondenceMatrix::units_above(long long m) const {
  long long t = 0;
  for (const auto& [jk, b] : entries_)
    if (jk.first + jk.second - 1 > m) t += b;
  return t;
}

std::vector<std::vector<long long>> CorrespondenceMatrix::to_dense() const {
  int maxj = 0, maxk = 0;
  for (const auto& [jk, b] : entries_) {
    maxj = std::max(maxj, jk.first);
    maxk = std::max(maxk, jk.second);
  }
  std::vector<std::vector<long long>> rows(maxj, std::vector<long long>(maxk, 0));
  for (const auto& [jk, b] : entries_) rows[jk.first - 1][jk.second - 1] = b;
  return rows;
}

CorrespondenceMatrix CorrespondenceMatrix::from_dense(
    const std::vector<std::vector<long long>>& rows) {
  CorrespondenceMatrix m;
  for (size_t j = 0; j < rows.size(); ++j)
    for (size_t k = 0; k < rows[j].size(); ++k)
      if (rows[j][k]) m.add(static_cast<int>(j + 1), static_cast<int>(k + 1), rows[j][k]);
  return m;
}

std::string CorrespondenceMatrix::to_json() const {
  auto rows = to_dense();
  for (auto& row : rows)
    while (!row.empty() && row.back() == 0) row.pop_back();
  std::ostringstream out;
  out << '[';
  for (size_t j = 0; j < rows.size(); ++j) {
    if (j) out << ',';
    out << '[';
    for (size_t k = 0; k < rows[j].size(); ++k) {
      if (k) out << ',';
      out << rows[j][k];
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

bool is_column_strict(const PlanePartition& pp) {
  const auto& rows = pp.rows();
  for (size_t h = 0; h + 1 < rows.size(); ++h)
    for (size_t j = 0; j < rows[h + 1].size(); ++j)
      if (rows[h + 1][j] >= rows[h][j]) return false;
  return true;
}

void validate_pair(const ColumnStrictPair& p) {
  if (!(p.first.shape() == p.second.shape()))
    throw std::invalid_argument("pair members must have the same shape");
  if (!is_column_strict(p.first) || !is_column_strict(p.second))
    throw std::invalid_argument("pair members must be column-strict");
}

// ---------------------------------------------------------------------------
// Row insertion on the decreasing alphabet. Inserting x into a weakly
// decreasing row replaces the leftmost entry strictly smaller than x and
// bumps it down; biletters (j,k) are processed with j descending, then k
// descending, which keeps the recording half column-strict.
// ---------------------------------------------------------------------------

namespace {

struct Tableaux {
  std::vector<std::vector<int>> p, q;
};

void insert_biletter(Tableaux& t, int j, int k) {
  int y = k;
  for (size_t r = 0;; ++r) {
    if (r == t.p.size()) {
      t.p.push_back({y});
      t.q.push_back({j});
      return;
    }
    auto& row = t.p[r];
    auto it = std::find_if(row.begin(), row.end(), [y](int v) { return v < y; });
    if (it == row.end()) {
      row.push_back(y);
      t.q[r].push_back(j);
      return;
    }
    std::swap(*it, y);
  }
}

}  // namespace

ColumnStrictPair knuth_map(const CorrespondenceMatrix& m) {
  // biletters sorted j descending, k descending
  std::vector<std::pair<int, int>> cells(m.entries().size());
  std::transform(m.entries().begin(), m.entries().end(), cells.begin(),
                 [](const auto& e) { return e.first; });
  std::sort(cells.begin(), cells.end(), [](auto a, auto b) { return a > b; });
  Tableaux t;
  for (const auto& [j, k] : cells)
    for (long long c = m.at(j, k); c > 0; --c) insert_biletter(t, j, k);
  ColumnStrictPair out{core::unchecked_plane_partition(std::move(t.p)),
                       core::unchecked_plane_partition(std::move(t.q))};
  return out;
}

CorrespondenceMatrix knuth_inverse(const ColumnStrictPair& pair) {
  validate_pair(pair);
  auto p = pair.first.rows();
  auto q = pair.second.rows();
  CorrespondenceMatrix m;
  while (!p.empty()) {
    // Un-insert the most recently added cell: the minimal entry of the
    // recording half; among equal entries the one in the rightmost column.
    // Only removable corners qualify.
    int best_r = -1, best_c = -1, best_v = 0;
    for (size_t r = 0; r < q.size(); ++r) {
      int c = static_cast<int>(q[r].size()) - 1;
      if (c < 0) continue;
      if (r + 1 < q.size() && static_cast<int>(q[r + 1].size()) > c) continue;
      int v = q[r][c];
      if (best_r < 0 || v < best_v || (v == best_v && c > best_c)) {
        best_r = static_cast<int>(r);
        best_c = c;
        best_v = v;
      }
    }
    int j = q[best_r].back();
    q[best_r].pop_back();
    int y = p[best_r].back();
    p[best_r].pop_back();
    if (q[best_r].empty()) {
      q.erase(q.begin() + best_r);
      p.erase(p.begin() + best_r);
    }
    for (int r = best_r - 1; r >= 0; --r) {
      // rightmost entry strictly greater than y moves down the bumping path
      auto& row = p[r];
      int idx = -1;
      for (int c = static_cast<int>(row.size()) - 1; c >= 0; --c)
        if (row[c] > y) {
          idx = c;
          break;
        }
      std::swap(row[idx], y);
    }
    m.add(j, y, 1);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Diagonal splitting: a column of a plane partition, read downward as a
// linear partition mu, is encoded by the arms a_v = mu_v - v + 1 and legs
// l_v = mu*_v - v + 1 of its Durfee-diagonal cells.
// ---------------------------------------------------------------------------

ColumnStrictPair bender_knuth_inverse(const PlanePartition& pp) {
  std::vector<std::vector<int>> arms_cols, legs_cols;
  for (const auto& col : pp.columns()) {
    std::vector<int> a, l;
    int len = static_cast<int>(col.size());
    for (int v = 1; v <= len && col[v - 1] >= v; ++v) a.push_back(col[v - 1] - v + 1);
    int d = static_cast<int>(a.size());
    for (int v = 1; v <= d; ++v) {
      int conj = 0;  // mu*_v = number of entries >= v
      for (int h = 0; h < len; ++h)
        if (col[h] >= v) ++conj;
      l.push_back(conj - v + 1);
    }
    arms_cols.push_back(std::move(a));
    legs_cols.push_back(std::move(l));
  }
  auto cols_to_rows = [](const std::vector<std::vector<int>>& cols) {
    std::vector<std::vector<int>> rows;
    size_t nrows = 0;
    for (const auto& c : cols) nrows = std::max(nrows, c.size());
    rows.resize(nrows);
    for (const auto& c : cols)
      for (size_t h = 0; h < c.size(); ++h) rows[h].push_back(c[h]);
    return rows;
  };
  return {core::unchecked_plane_partition(cols_to_rows(arms_cols)),
          core::unchecked_plane_partition(cols_to_rows(legs_cols))};
}

core::PlanePartition bender_knuth_map(const ColumnStrictPair& pair) {
  validate_pair(pair);
  auto acols = pair.first.columns();
  auto lcols = pair.second.columns();
  std::vector<std::vector<int>> out_cols;
  for (size_t c = 0; c < acols.size(); ++c) {
    const auto& a = acols[c];
    const auto& l = lcols[c];
    int d = static_cast<int>(a.size());
    std::vector<int> mu;
    for (int v = 1; v <= d; ++v) mu.push_back(a[v - 1] + v - 1);
    for (int h = d + 1;; ++h) {
      int cnt = 0;  // entries below the Durfee square come from the legs
      for (int v = 1; v <= d; ++v)
        if (l[v - 1] + v - 1 >= h) ++cnt;
      if (cnt == 0) break;
      mu.push_back(cnt);
    }
    out_cols.push_back(std::move(mu));
  }
  std::vector<std::vector<int>> rows;
  size_t nrows = 0;
  for (const auto& c : out_cols) nrows = std::max(nrows, c.size());
  rows.resize(nrows);
  for (const auto& c : out_cols)
    for (size_t h = 0; h < c.size(); ++h) rows[h].push_back(c[h]);
  return core::unchecked_plane_partition(std::move(rows));
}

}  // namespace pplab::bij
