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
 * Exact rational linear programming.
 *
 * Systems are equality constraints A x = b with per-variable sign status
 * (nonnegative or free). Feasibility runs a phase-1 simplex with Bland's
 * rule, so it always terminates; infeasibility is reported with a Farkas
 * certificate y satisfying y^T A >= 0 on nonnegative variables, y^T A = 0 on
 * free variables, and y^T b < 0, and the certificate is re-verified exactly
 * before it is returned. A bounded exact maximization is provided for the
 * few callers that need one (fractional matching number, normalized affine
 * dependencies).
 */

#include <optional>
#include <stdexcept>
#include <vector>

#include "topohall/rational.hpp"
#include "topohall/rational_matrix.hpp"

namespace topohall::exactla {

enum class VarSign { NonNeg, Free };
enum class DependenceSign { NonNeg, NonPos };

struct LPFeasibility {
  RationalMatrix a;             // m x n equality constraints a * x = b
  std::vector<Rational> b;      // m right-hand sides
  std::vector<VarSign> signs;   // n per-variable sign statuses
  // Optional strict-nonzero requirement: each group (indices of NonNeg
  // variables) must not be identically zero in the returned point.
  std::vector<std::vector<int>> nonzero_groups;

  LPFeasibility(RationalMatrix a_, std::vector<Rational> b_, std::vector<VarSign> signs_)
      : a(std::move(a_)), b(std::move(b_)), signs(std::move(signs_)) {
    if (a.rows() != static_cast<int>(b.size()) || a.cols() != static_cast<int>(signs.size())) {
      throw std::invalid_argument("LPFeasibility: dimension mismatch");
    }
  }
};

struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rational> point;        // satisfies every constraint exactly when feasible
  std::vector<Rational> certificate;  // Farkas y when infeasible (empty for group failures)
  bool group_infeasible = false;      // feasible region forces a nonzero group to zero
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPOptimum {
  LPStatus status = LPStatus::Infeasible;
  std::vector<Rational> x;
  Rational value;
  std::vector<Rational> farkas;
};

namespace detail {

// Full-tableau simplex over mpq with Bland's rule, all variables nonnegative.
class Simplex {
 public:
  Simplex(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b)
      : m_(static_cast<int>(a.size())), n_(m_ == 0 ? 0 : static_cast<int>(a[0].size())) {
    tab_.assign(m_, std::vector<mpq_class>(n_ + m_ + 1, 0));
    basis_.resize(m_);
    row_sign_.assign(m_, 1);
    for (int i = 0; i < m_; ++i) {
      if (sgn(b[i]) < 0) {
        row_sign_[i] = -1;
        for (auto& v : a[i]) v = -v;
        b[i] = -b[i];
      }
      for (int j = 0; j < n_; ++j) tab_[i][j] = a[i][j];
      tab_[i][n_ + i] = 1;
      tab_[i][rhs()] = b[i];
      basis_[i] = n_ + i;
    }
  }

  // Minimizes the artificial sum. True iff the system is feasible.
  bool phase1() {
    cost_.assign(n_ + m_ + 1, 0);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) cost_[j] -= tab_[i][j];
      cost_[rhs()] -= tab_[i][rhs()];
    }
    run(n_ + m_);
    if (sgn(cost_[rhs()]) != 0) {
      farkas_.resize(m_);
      for (int i = 0; i < m_; ++i) {
        // Reduced cost of artificial i is 1 - y_i; flip and undo row signs.
        farkas_[i] = -mpq_class(row_sign_[i]) * (1 - cost_[n_ + i]);
      }
      return false;
    }
    drive_out_artificials();
    return true;
  }

  enum class Status { Optimal, Unbounded };

  // Maximizes c^T x over the feasible region; call only after phase1().
  Status maximize(const std::vector<mpq_class>& c) {
    cost_.assign(n_ + m_ + 1, 0);
    for (int j = 0; j < n_; ++j) cost_[j] = -c[j];
    for (int i = 0; i < m_; ++i) {
      const int bj = basis_[i];
      if (bj < n_ && sgn(c[bj]) != 0) {
        for (int j = 0; j <= rhs(); ++j) cost_[j] += c[bj] * tab_[i][j];
      }
    }
    // Artificial columns are frozen out of phase 2.
    return run(n_) ? Status::Optimal : Status::Unbounded;
  }

  // The cost row tracks the negated phase objective, so its right-hand entry
  // is -(-c^T x) = c^T x for the maximization phase.
  mpq_class objective() const { return cost_[rhs()]; }

  std::vector<mpq_class> solution() const {
    std::vector<mpq_class> x(n_, 0);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = tab_[i][rhs()];
    }
    return x;
  }

  const std::vector<mpq_class>& farkas() const { return farkas_; }

 private:
  int rhs() const { return n_ + m_; }

  // Bland: entering = lowest negative reduced cost index; leaving = lowest
  // basis index among minimum ratios. False on unboundedness.
  bool run(int col_limit) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < col_limit; ++j) {
        if (sgn(cost_[j]) < 0) { enter = j; break; }
      }
      if (enter < 0) return true;
      int leave = -1;
      mpq_class best;
      for (int i = 0; i < m_; ++i) {
        if (sgn(tab_[i][enter]) <= 0) continue;
        mpq_class ratio = tab_[i][rhs()] / tab_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int r, int c) {
    const mpq_class p = tab_[r][c];
    for (auto& v : tab_[r]) v /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == r || sgn(tab_[i][c]) == 0) continue;
      const mpq_class f = tab_[i][c];
      for (int j = 0; j <= rhs(); ++j) tab_[i][j] -= f * tab_[r][j];
    }
    if (sgn(cost_[c]) != 0) {
      const mpq_class f = cost_[c];
      for (int j = 0; j <= rhs(); ++j) cost_[j] -= f * tab_[r][j];
    }
    basis_[r] = c;
  }

  // Pivots zero-level artificials onto structural columns; rows that are
  // zero on every structural column are redundant and dropped.
  void drive_out_artificials() {
    for (int i = m_ - 1; i >= 0; --i) {
      if (basis_[i] < n_) continue;
      int col = -1;
      for (int j = 0; j < n_; ++j) {
        if (sgn(tab_[i][j]) != 0) { col = j; break; }
      }
      if (col >= 0) {
        pivot(i, col);
      } else {
        tab_.erase(tab_.begin() + i);
        basis_.erase(basis_.begin() + i);
        row_sign_.erase(row_sign_.begin() + i);
        --m_;
        // Column layout keeps the original width; dead artificial columns
        // are simply never entered again.
      }
    }
  }

  int m_;
  int n_;
  std::vector<std::vector<mpq_class>> tab_;
  std::vector<mpq_class> cost_;
  std::vector<int> basis_;
  std::vector<int> row_sign_;
  std::vector<mpq_class> farkas_;
};

struct SplitSystem {
  std::vector<std::vector<mpq_class>> a;  // m x n_split
  std::vector<mpq_class> b;
  std::vector<int> pos_col;  // per original var: its (+) column
  std::vector<int> neg_col;  // per original var: its (-) column, -1 if none
};

// Splits free variables into differences of nonnegative ones.
inline SplitSystem split_free_vars(const RationalMatrix& a, const std::vector<Rational>& b,
                                   const std::vector<VarSign>& signs) {
  SplitSystem s;
  const int m = a.rows();
  const int n = a.cols();
  s.pos_col.resize(n);
  s.neg_col.assign(n, -1);
  int width = 0;
  for (int j = 0; j < n; ++j) {
    s.pos_col[j] = width++;
    if (signs[j] == VarSign::Free) s.neg_col[j] = width++;
  }
  s.a.assign(m, std::vector<mpq_class>(width, 0));
  for (const auto& [rc, v] : a.entries()) {
    s.a[rc.first][s.pos_col[rc.second]] = v.raw();
    if (s.neg_col[rc.second] >= 0) s.a[rc.first][s.neg_col[rc.second]] = -v.raw();
  }
  s.b.resize(m);
  for (int i = 0; i < m; ++i) s.b[i] = b[i].raw();
  return s;
}

inline std::vector<Rational> merge_split_point(const SplitSystem& s,
                                               const std::vector<mpq_class>& x) {
  std::vector<Rational> out(s.pos_col.size());
  for (std::size_t j = 0; j < s.pos_col.size(); ++j) {
    mpq_class v = x[s.pos_col[j]];
    if (s.neg_col[j] >= 0) v -= x[s.neg_col[j]];
    out[j] = Rational(v);
  }
  return out;
}

}  // namespace detail

// Checks a Farkas certificate exactly against the original system.
inline bool verify_farkas(const RationalMatrix& a, const std::vector<Rational>& b,
                          const std::vector<VarSign>& signs, const std::vector<Rational>& y) {
  if (static_cast<int>(y.size()) != a.rows()) return false;
  std::vector<Rational> yta(a.cols());
  for (const auto& [rc, v] : a.entries()) yta[rc.second] += y[rc.first] * v;
  for (int j = 0; j < a.cols(); ++j) {
    if (signs[j] == VarSign::Free ? !yta[j].is_zero() : yta[j].sign() < 0) return false;
  }
  Rational ytb;
  for (int i = 0; i < a.rows(); ++i) ytb += y[i] * b[i];
  return ytb.sign() < 0;
}

// Checks a point exactly against the original system.
inline bool verify_point(const RationalMatrix& a, const std::vector<Rational>& b,
                         const std::vector<VarSign>& signs, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != a.cols()) return false;
  for (int j = 0; j < a.cols(); ++j) {
    if (signs[j] == VarSign::NonNeg && x[j].sign() < 0) return false;
  }
  std::vector<Rational> ax(a.rows());
  for (const auto& [rc, v] : a.entries()) ax[rc.first] += v * x[rc.second];
  for (int i = 0; i < a.rows(); ++i) {
    if (ax[i] != b[i]) return false;
  }
  return true;
}

inline FeasibilityResult lp_feasible(const LPFeasibility& p) {
  for (const auto& group : p.nonzero_groups) {
    for (int j : group) {
      if (j < 0 || j >= p.a.cols()) throw std::invalid_argument("lp_feasible: group index out of range");
      if (p.signs[j] != VarSign::NonNeg) {
        throw std::invalid_argument("lp_feasible: nonzero groups must hold nonnegative variables");
      }
    }
  }
  auto split = detail::split_free_vars(p.a, p.b, p.signs);
  detail::Simplex simplex(split.a, split.b);
  FeasibilityResult result;
  if (!simplex.phase1()) {
    result.feasible = false;
    result.certificate.reserve(simplex.farkas().size());
    for (const auto& v : simplex.farkas()) result.certificate.emplace_back(v);
    if (!verify_farkas(p.a, p.b, p.signs, result.certificate)) {
      throw std::logic_error("lp_feasible: Farkas certificate failed exact re-verification");
    }
    return result;
  }
  std::vector<std::vector<Rational>> witnesses;
  witnesses.push_back(detail::merge_split_point(split, simplex.solution()));
  for (const auto& group : p.nonzero_groups) {
    bool already = false;
    for (int j : group) {
      if (!witnesses.front()[j].is_zero()) { already = true; break; }
    }
    if (already) continue;
    // Maximize the group's sum under an added normalization so the search
    // stays bounded; a positive optimum yields a witness for this group.
    const int n = p.a.cols();
    RationalMatrix a2(p.a.rows() + 1, n + 1);
    for (const auto& [rc, v] : p.a.entries()) a2.set(rc.first, rc.second, v);
    for (int j : group) a2.set(p.a.rows(), j, Rational(1));
    a2.set(p.a.rows(), n, Rational(1));  // slack: sum over group <= 1
    std::vector<Rational> b2 = p.b;
    b2.emplace_back(1);
    std::vector<VarSign> signs2 = p.signs;
    signs2.push_back(VarSign::NonNeg);
    auto split2 = detail::split_free_vars(a2, b2, signs2);
    detail::Simplex s2(split2.a, split2.b);
    if (!s2.phase1()) {
      // The group sum cannot even reach the [0, 1] window: it is fixed at 0.
      result.group_infeasible = true;
      result.feasible = false;
      return result;
    }
    std::vector<mpq_class> c(split2.a[0].size(), 0);
    for (int j : group) c[split2.pos_col[j]] = 1;
    s2.maximize(c);
    if (sgn(s2.objective()) <= 0) {
      result.group_infeasible = true;
      result.feasible = false;
      return result;
    }
    auto w = detail::merge_split_point(split2, s2.solution());
    w.resize(n);  // drop the slack
    witnesses.push_back(std::move(w));
  }
  // The average of feasible points is feasible and keeps every witnessed
  // group strictly positive.
  std::vector<Rational> point(p.a.cols());
  const Rational inv(1, static_cast<long>(witnesses.size()));
  for (const auto& w : witnesses) {
    for (int j = 0; j < p.a.cols(); ++j) point[j] += w[j] * inv;
  }
  if (!verify_point(p.a, p.b, p.signs, point)) {
    throw std::logic_error("lp_feasible: point failed exact re-verification");
  }
  result.feasible = true;
  result.point = std::move(point);
  return result;
}

// Maximizes c^T x subject to a x = b and the sign statuses.
inline LPOptimum lp_maximize(const RationalMatrix& a, const std::vector<Rational>& b,
                             const std::vector<VarSign>& signs, const std::vector<Rational>& c) {
  if (a.rows() != static_cast<int>(b.size()) || a.cols() != static_cast<int>(signs.size()) ||
      a.cols() != static_cast<int>(c.size())) {
    throw std::invalid_argument("lp_maximize: dimension mismatch");
  }
  auto split = detail::split_free_vars(a, b, signs);
  detail::Simplex simplex(split.a, split.b);
  LPOptimum out;
  if (!simplex.phase1()) {
    out.status = LPStatus::Infeasible;
    out.farkas.reserve(simplex.farkas().size());
    for (const auto& v : simplex.farkas()) out.farkas.emplace_back(v);
    if (!verify_farkas(a, b, signs, out.farkas)) {
      throw std::logic_error("lp_maximize: Farkas certificate failed exact re-verification");
    }
    return out;
  }
  const std::size_t width = split.a.empty() ? 0 : split.a[0].size();
  std::vector<mpq_class> cc(width, 0);
  for (int j = 0; j < a.cols(); ++j) {
    cc[split.pos_col[j]] += c[j].raw();
    if (split.neg_col[j] >= 0) cc[split.neg_col[j]] -= c[j].raw();
  }
  if (simplex.maximize(cc) == detail::Simplex::Status::Unbounded) {
    out.status = LPStatus::Unbounded;
    return out;
  }
  out.status = LPStatus::Optimal;
  out.x = detail::merge_split_point(split, simplex.solution());
  out.value = Rational(simplex.objective());
  if (!verify_point(a, b, signs, out.x)) {
    throw std::logic_error("lp_maximize: point failed exact re-verification");
  }
  return out;
}

// Any nonzero rational kernel vector of m, or none when m has full column
// rank. Deterministic: unit at the first non-pivot column.
inline std::optional<std::vector<Rational>> kernel_vector(const RationalMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols, 0));
  for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v.raw();
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (sgn(a[i][c]) != 0) { pr = i; break; }
    }
    if (pr < 0) continue;
    std::swap(a[r], a[pr]);
    const mpq_class p = a[r][c];
    for (auto& v : a[r]) v /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const mpq_class f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = -1;
  for (int c = 0; c < cols; ++c) {
    if (!is_pivot[c]) { free_col = c; break; }
  }
  if (free_col < 0) return std::nullopt;
  std::vector<Rational> x(cols);
  x[free_col] = Rational(1);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    x[pivot_col[i]] = Rational(mpq_class(-a[i][free_col]));
  }
  return x;
}

// Nonzero alpha with sum(alpha) = 0 and sum(alpha_i x_i) = 0, each entry
// respecting its declared sign, or none. Nonzero-ness comes from maximizing
// sum |alpha_i| under the normalization sum |alpha_i| <= 1.
inline std::optional<std::vector<Rational>> affine_dependence_with_signs(
    const std::vector<std::vector<Rational>>& points, const std::vector<DependenceSign>& signs) {
  const int n = static_cast<int>(points.size());
  if (n == 0 || signs.size() != points.size()) {
    throw std::invalid_argument("affine_dependence_with_signs: bad arguments");
  }
  const int d = static_cast<int>(points[0].size());
  for (const auto& pt : points) {
    if (static_cast<int>(pt.size()) != d) {
      throw std::invalid_argument("affine_dependence_with_signs: mixed dimensions");
    }
  }
  // Variables a_i = |alpha_i| >= 0 plus one slack for the normalization.
  RationalMatrix a(d + 2, n + 1);
  std::vector<Rational> b(d + 2);
  for (int i = 0; i < n; ++i) {
    const Rational s(signs[i] == DependenceSign::NonNeg ? 1 : -1);
    a.set(0, i, s);
    for (int k = 0; k < d; ++k) a.set(1 + k, i, s * points[i][k]);
    a.set(d + 1, i, Rational(1));
  }
  a.set(d + 1, n, Rational(1));
  b[d + 1] = Rational(1);
  std::vector<VarSign> vs(n + 1, VarSign::NonNeg);
  std::vector<Rational> c(n + 1);
  for (int i = 0; i < n; ++i) c[i] = Rational(1);
  const LPOptimum opt = lp_maximize(a, b, vs, c);
  if (opt.status != LPStatus::Optimal || opt.value.sign() <= 0) return std::nullopt;
  std::vector<Rational> alpha(n);
  for (int i = 0; i < n; ++i) {
    alpha[i] = signs[i] == DependenceSign::NonNeg ? opt.x[i] : -opt.x[i];
  }
  return alpha;
}

}  // namespace topohall::exactla
