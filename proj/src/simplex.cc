// Copyright 2026 The permcode Authors
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

#include "permcode/simplex.h"

#include <cstddef>
#include <stdexcept>

namespace permcode {
namespace {

// Tableau rows hold [coefficients..., rhs]. The objective row stores
// reduced costs z_j - c_j; a column may enter while its entry is negative.
class Tableau {
 public:
  Tableau(size_t rows, size_t cols)
      : cols_(cols), t_(rows, std::vector<Rational>(cols + 1)), basis_(rows) {}

  std::vector<Rational>& row(size_t i) { return t_[i]; }
  Rational& rhs(size_t i) { return t_[i][cols_]; }
  std::vector<size_t>& basis() { return basis_; }
  size_t rows() const { return t_.size(); }
  size_t cols() const { return cols_; }

  void Pivot(size_t r, size_t c, std::vector<Rational>& objective) {
    const Rational piv = t_[r][c];
    for (auto& v : t_[r]) v /= piv;
    for (size_t i = 0; i < t_.size(); ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const Rational f = t_[i][c];
      for (size_t j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[r][j];
    }
    if (objective[c] != 0) {
      const Rational f = objective[c];
      for (size_t j = 0; j <= cols_; ++j) objective[j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  // Runs Bland-rule iterations on `objective` over columns < active_cols.
  // Returns kOptimal, kUnbounded, or kPivotLimit.
  LpStatus Optimize(std::vector<Rational>& objective, size_t active_cols,
                    int& pivots, int pivot_limit) {
    while (true) {
      size_t enter = active_cols;
      for (size_t j = 0; j < active_cols; ++j) {
        if (objective[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == active_cols) return LpStatus::kOptimal;
      size_t leave = rows();
      Rational best_ratio;
      for (size_t i = 0; i < rows(); ++i) {
        if (t_[i][enter] <= 0) continue;
        const Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave == rows() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows()) return LpStatus::kUnbounded;
      if (++pivots > pivot_limit) return LpStatus::kPivotLimit;
      Pivot(leave, enter, objective);
    }
  }

 private:
  size_t cols_;
  std::vector<std::vector<Rational>> t_;
  std::vector<size_t> basis_;
};

}  // namespace

LpSolution MaximizeSimplex(const std::vector<std::vector<Rational>>& a,
                           const std::vector<Rational>& b,
                           const std::vector<Rational>& c, int pivot_limit) {
  const size_t m = a.size();
  const size_t n = c.size();
  if (b.size() != m) throw std::invalid_argument("MaximizeSimplex: b size");
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("MaximizeSimplex: A size");
  }

  // Columns: x (n), slacks (m), artificials (one per negative rhs).
  std::vector<size_t> artificial_row;
  for (size_t i = 0; i < m; ++i) {
    if (b[i] < 0) artificial_row.push_back(i);
  }
  const size_t structural = n + m;
  const size_t cols = structural + artificial_row.size();
  Tableau tab(m, cols);
  for (size_t i = 0, art = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    auto& row = tab.row(i);
    for (size_t j = 0; j < n; ++j) row[j] = flip ? Rational(-a[i][j]) : a[i][j];
    row[n + i] = flip ? -1 : 1;
    tab.rhs(i) = flip ? Rational(-b[i]) : b[i];
    if (flip) {
      row[structural + art] = 1;
      tab.basis()[i] = structural + art;
      ++art;
    } else {
      tab.basis()[i] = n + i;
    }
  }

  LpSolution sol;
  if (!artificial_row.empty()) {
    // Phase 1: maximize -sum(artificials); express in non-basic terms.
    std::vector<Rational> obj(cols + 1);
    for (size_t k = 0; k < artificial_row.size(); ++k) obj[structural + k] = 1;
    for (size_t i : artificial_row) {
      for (size_t j = 0; j <= cols; ++j) obj[j] -= tab.row(i)[j];
    }
    const LpStatus st = tab.Optimize(obj, cols, sol.pivots, pivot_limit);
    if (st == LpStatus::kPivotLimit) {
      sol.status = st;
      return sol;
    }
    if (obj[cols] != 0) {
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
    // Drive zero-level artificials out of the basis where possible.
    std::vector<Rational> dummy(cols + 1);
    for (size_t i = 0; i < m; ++i) {
      if (tab.basis()[i] < structural) continue;
      for (size_t j = 0; j < structural; ++j) {
        if (tab.row(i)[j] != 0) {
          tab.Pivot(i, j, dummy);
          break;
        }
      }
    }
  }

  // Phase 2 over structural columns only. A row whose artificial could not
  // be pivoted out is redundant and stays at level zero.
  std::vector<Rational> obj(cols + 1);
  for (size_t j = 0; j < n; ++j) obj[j] = -c[j];
  for (size_t i = 0; i < m; ++i) {
    const size_t bj = tab.basis()[i];
    if (bj < n && c[bj] != 0) {
      const Rational f = c[bj];
      for (size_t j = 0; j <= cols; ++j) obj[j] += f * tab.row(i)[j];
    }
  }
  sol.status = tab.Optimize(obj, structural, sol.pivots, pivot_limit);
  if (sol.status != LpStatus::kOptimal) return sol;
  sol.x.assign(n, 0);
  for (size_t i = 0; i < m; ++i) {
    if (tab.basis()[i] < n) sol.x[tab.basis()[i]] = tab.rhs(i);
  }
  sol.objective = obj[cols];
  return sol;
}

}  // namespace permcode
