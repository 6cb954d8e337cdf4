#pragma once

#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace braidscope {

namespace detail {

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("smith: integer overflow");
  return r;
}

inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("smith: integer overflow");
  return r;
}

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("smith: integer overflow");
  return r;
}

}  // namespace detail

/// Integer matrix stored sparsely, row-major with a per-column row
/// index. Built by accumulation, then consumed by smith_normal_form.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::map<int, long long>> row;

  SparseIntMatrix(int r, int c) : rows(r), cols(c), row(r) {
    if (r < 0 || c < 0) throw std::invalid_argument("SparseIntMatrix: negative size");
  }

  void add(int r, int c, long long v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
      throw std::out_of_range("SparseIntMatrix::add: index out of range");
    if (v == 0) return;
    auto [it, inserted] = row[r].try_emplace(c, 0);
    it->second = detail::checked_add(it->second, v);
    if (it->second == 0) row[r].erase(it);
  }
};

struct SmithSummary {
  long long rank = 0;
  std::vector<long long> divisors;  // nonzero diagonal in divisibility order, 1s included

  std::vector<long long> torsion() const {
    std::vector<long long> t;
    for (long long d : divisors)
      if (d > 1) t.push_back(d);
    return t;
  }

  bool operator==(const SmithSummary&) const = default;
};

namespace detail {

/// Textbook dense Smith reduction for whatever survives the sparse
/// unit-pivot sweep; returns the positive diagonal in divisibility order.
inline std::vector<long long> dense_smith_diagonal(std::vector<std::vector<long long>> a) {
  const int R = static_cast<int>(a.size());
  const int C = R ? static_cast<int>(a[0].size()) : 0;
  std::vector<long long> diag;
  int t = 0;
  while (t < R && t < C) {
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = t; i < R; ++i)
      for (int j = t; j < C; ++j)
        if (a[i][j] != 0 && (pi < 0 || std::llabs(a[i][j]) < best)) {
          pi = i;
          pj = j;
          best = std::llabs(a[i][j]);
        }
    if (pi < 0) break;
    std::swap(a[t], a[pi]);
    for (int i = 0; i < R; ++i) std::swap(a[i][t], a[i][pj]);
    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < R; ++i) {
        if (a[i][t] == 0) continue;
        long long q = a[i][t] / a[t][t];
        for (int j = t; j < C; ++j) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[t][j]));
        if (a[i][t] != 0) {  // remainder smaller than the pivot: promote it
          std::swap(a[i], a[t]);
          dirty = true;
        }
      }
      for (int j = t + 1; j < C; ++j) {
        if (a[t][j] == 0) continue;
        long long q = a[t][j] / a[t][t];
        for (int i = t; i < R; ++i) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[i][t]));
        if (a[t][j] != 0) {
          for (int i = 0; i < R; ++i) std::swap(a[i][j], a[i][t]);
          dirty = true;
        }
      }
      if (!dirty) {
        // Pivot must divide the rest of the submatrix; fold in a bad row
        // and keep reducing if it does not.
        bool fixed = true;
        for (int i = t + 1; i < R && fixed; ++i)
          for (int j = t + 1; j < C && fixed; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (int k = t; k < C; ++k) a[t][k] = checked_add(a[t][k], a[i][k]);
              fixed = false;
            }
        if (fixed) break;
      }
    }
    diag.push_back(std::llabs(a[t][t]));
    ++t;
  }
  return diag;
}

}  // namespace detail

/// Smith normal form summary (rank plus diagonal) of a sparse integer
/// matrix. Unit entries are eliminated first with a fill-minimizing
/// pivot order; the small remainder goes through dense reduction.
inline SmithSummary smith_normal_form(SparseIntMatrix m) {
  std::vector<std::set<int>> col_rows(m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : m.row[r]) {
      (void)v;
      col_rows[c].insert(r);
    }

  using Cand = std::tuple<long long, int, int>;  // (fill cost, row, col)
  std::priority_queue<Cand, std::vector<Cand>, std::greater<>> heap;
  auto fill_cost = [&](int r, int c) {
    return static_cast<long long>(m.row[r].size() - 1) *
           static_cast<long long>(col_rows[c].size() - 1);
  };
  for (int r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : m.row[r])
      if (v == 1 || v == -1) heap.emplace(fill_cost(r, c), r, c);

  long long unit_count = 0;
  while (!heap.empty()) {
    auto [cost, r, c] = heap.top();
    heap.pop();
    auto it = m.row[r].find(c);
    if (it == m.row[r].end() || (it->second != 1 && it->second != -1)) continue;
    long long cur = fill_cost(r, c);
    if (cur != cost) {  // stale priority: requeue at its current cost
      heap.emplace(cur, r, c);
      continue;
    }
    const long long p = it->second;
    const std::vector<int> pivot_col_rows(col_rows[c].begin(), col_rows[c].end());
    std::vector<std::pair<int, long long>> pivot_row_rest;
    for (const auto& [c2, v2] : m.row[r])
      if (c2 != c) pivot_row_rest.emplace_back(c2, v2);
    // Column operations clear the pivot row (and, applied to every row
    // holding column c, keep the matrix equivalent).
    for (const auto& [c2, v2] : pivot_row_rest) {
      const long long f = detail::checked_mul(v2, p);  // v2 / p with p = +-1
      for (int r2 : pivot_col_rows) {
        long long acv = m.row[r2].at(c);
        auto [jt, inserted] = m.row[r2].try_emplace(c2, 0);
        if (inserted) col_rows[c2].insert(r2);
        jt->second = detail::checked_sub(jt->second, detail::checked_mul(f, acv));
        if (jt->second == 0) {
          m.row[r2].erase(jt);
          col_rows[c2].erase(r2);
        } else if (jt->second == 1 || jt->second == -1) {
          heap.emplace(fill_cost(r2, c2), r2, c2);
        }
      }
    }
    // The pivot row is now {c: p}; clearing column c costs no fill.
    for (int r2 : pivot_col_rows)
      if (r2 != r) m.row[r2].erase(c);
    m.row[r].clear();
    col_rows[c].clear();
    ++unit_count;
  }

  // Compact whatever is left into a dense block.
  std::map<int, int> row_ids, col_ids;
  for (int r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : m.row[r]) {
      (void)v;
      row_ids.try_emplace(r, static_cast<int>(row_ids.size()));
      col_ids.try_emplace(c, static_cast<int>(col_ids.size()));
    }
  SmithSummary out;
  out.divisors.assign(unit_count, 1);
  if (!row_ids.empty()) {
    std::vector<std::vector<long long>> dense(row_ids.size(),
                                              std::vector<long long>(col_ids.size(), 0));
    for (const auto& [r, ri] : row_ids)
      for (const auto& [c, v] : m.row[r]) dense[ri][col_ids.at(c)] = v;
    auto diag = detail::dense_smith_diagonal(std::move(dense));
    out.divisors.insert(out.divisors.end(), diag.begin(), diag.end());
  }
  out.rank = static_cast<long long>(out.divisors.size());
  return out;
}

}  // namespace braidscope
