// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * Sparse exact rational matrices with exact rank.
 *
 * Entries are stored in a map keyed by (row, col) with no explicit zeros, so
 * iteration order is deterministic. Rank is computed by fraction-free Bareiss
 * elimination after clearing denominators row by row; a machine-integer fast
 * path handles the common small cases and falls back to arbitrary precision
 * whenever an intermediate value would overflow.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "topohall/rational.hpp"

namespace topohall::exactla {

// Rank of a dense integer matrix by Bareiss elimination, destroying `m`.
inline int bareiss_rank_mpz(std::vector<std::vector<mpz_class>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int rank = 0;
  mpz_class prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) { pivot = r; break; }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

// Same elimination over int64; empty when any step would overflow.
inline std::optional<int> bareiss_rank_i64(std::vector<std::vector<std::int64_t>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int rank = 0;
  std::int64_t prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) { pivot = r; break; }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        std::int64_t a, b, c;
        if (__builtin_mul_overflow(m[rank][col], m[i][j], &a)) return std::nullopt;
        if (__builtin_mul_overflow(m[i][col], m[rank][j], &b)) return std::nullopt;
        if (__builtin_sub_overflow(a, b, &c)) return std::nullopt;
        m[i][j] = c / prev;  // exact by the Bareiss identity
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

// Rank of a dense integer matrix, trying int64 first.
inline int rank_dense_int(const std::vector<std::vector<std::int64_t>>& m) {
  auto copy = m;
  if (auto r = bareiss_rank_i64(copy)) return *r;
  std::vector<std::vector<mpz_class>> big(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    big[i].assign(m[i].begin(), m[i].end());
  }
  return bareiss_rank_mpz(big);
}

class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RationalMatrix: negative dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }

  Rational at(int r, int c) const {
    check_index(r, c);
    const auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational() : it->second;
  }

  void set(int r, int c, const Rational& v) {
    check_index(r, c);
    if (v.is_zero()) {
      entries_.erase({r, c});
    } else {
      entries_[{r, c}] = v;
    }
  }

  // Sorted by (row, col); never contains zeros.
  const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (const auto& [rc, v] : entries_) t.set(rc.second, rc.first, v);
    return t;
  }

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
    return m;
  }

  bool is_zero() const { return entries_.empty(); }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  // Exact rank over the rationals.
  int rank() const {
    if (entries_.empty()) return 0;
    // Clearing denominators row by row preserves rank.
    std::vector<std::vector<mpz_class>> dense(rows_, std::vector<mpz_class>(cols_, 0));
    std::vector<mpz_class> row_lcm(rows_, 1);
    for (const auto& [rc, v] : entries_) {
      mpz_class& l = row_lcm[rc.first];
      l = lcm(l, v.den());
    }
    for (const auto& [rc, v] : entries_) {
      dense[rc.first][rc.second] = v.num() * (row_lcm[rc.first] / v.den());
    }
    bool fits = true;
    for (const auto& row : dense) {
      for (const auto& x : row) {
        if (!x.fits_slong_p()) { fits = false; break; }
      }
      if (!fits) break;
    }
    if (fits) {
      std::vector<std::vector<std::int64_t>> small(rows_, std::vector<std::int64_t>(cols_));
      for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) small[i][j] = dense[i][j].get_si();
      }
      if (auto r = bareiss_rank_i64(small)) return *r;
    }
    return bareiss_rank_mpz(dense);
  }

 private:
  void check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
      throw std::out_of_range("RationalMatrix: index out of bounds");
    }
  }

  int rows_;
  int cols_;
  std::map<std::pair<int, int>, Rational> entries_;
};

inline RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  RationalMatrix out(a.rows(), b.cols());
  std::map<std::pair<int, int>, Rational> acc;
  for (const auto& [rc1, v1] : a.entries()) {
    for (int j = 0; j < b.cols(); ++j) {
      const Rational v2 = b.at(rc1.second, j);
      if (v2.is_zero()) continue;
      acc[{rc1.first, j}] += v1 * v2;
    }
  }
  for (const auto& [rc, v] : acc) out.set(rc.first, rc.second, v);
  return out;
}

}  // namespace topohall::exactla
