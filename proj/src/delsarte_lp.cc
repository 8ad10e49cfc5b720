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

#include "permcode/delsarte_lp.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "permcode/simplex.h"

namespace permcode {

std::vector<int> ValidateDistances(int n, std::span<const int> distances) {
  std::vector<int> d(distances.begin(), distances.end());
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  for (int x : d) {
    if (x < 2 || x > n) {
      throw std::invalid_argument("distance " + std::to_string(x) +
                                  " outside [2, " + std::to_string(n) + "]");
    }
  }
  return d;
}

std::vector<int> DistancesFrom(int n, int dmin) {
  if (dmin < 2 || dmin > n) {
    throw std::invalid_argument("minimum distance must lie in [2, n]");
  }
  std::vector<int> d;
  for (int x = dmin; x <= n; ++x) d.push_back(x);
  return d;
}

int64_t TrivialProductBound(std::span<const int> distances) {
  int64_t p = 1;
  for (int d : distances) p *= d;
  return p;
}

const char* ToString(BoundStatus status) {
  switch (status) {
    case BoundStatus::kOptimal:
      return "optimal";
    case BoundStatus::kInfeasible:
      return "infeasible";
    case BoundStatus::kNumericalFailure:
      return "numerical-failure";
  }
  return "unknown";
}

LpProblem BuildLp(const CharacterTable& table, std::span<const int> distances) {
  LpProblem lp;
  lp.n = table.n();
  if (lp.n < 2) throw std::invalid_argument("BuildLp: n must be at least 2");
  lp.distances = ValidateDistances(lp.n, distances);
  for (int i = 1; i < table.size(); ++i) {
    const int w = HammingWeight(table.classes()[i]);
    if (std::binary_search(lp.distances.begin(), lp.distances.end(), w)) {
      lp.free_classes.push_back(i);
    }
  }
  for (int k = 0; k < table.size(); ++k) {
    lp.row_constant.push_back(table.degree(k));
    std::vector<int64_t> row;
    for (int i : lp.free_classes) row.push_back(table.value(k, i));
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

LpBoundResult SolveLp(const LpProblem& problem, const CharacterTable& table) {
  const size_t v = problem.free_classes.size();
  const size_t m = problem.rows.size();
  LpBoundResult result;

  // Primal: maximize 1 + sum a  s.t.  -sum_i chi_k(i) a_i <= chi_k(id).
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(v));
  std::vector<Rational> b(m);
  std::vector<Rational> c(v, 1);
  for (size_t k = 0; k < m; ++k) {
    for (size_t i = 0; i < v; ++i) a[k][i] = -problem.rows[k][i];
    b[k] = problem.row_constant[k];
  }
  const LpSolution primal = MaximizeSimplex(a, b, c);
  result.pivots = primal.pivots;
  if (primal.status == LpStatus::kInfeasible) {
    result.status = BoundStatus::kInfeasible;
    return result;
  }
  if (primal.status != LpStatus::kOptimal) {
    // Unbounded cannot happen (sum over characters of the constraints bounds
    // the objective by n!), so treat it as a failure like the pivot limit.
    return result;
  }

  // Dual: minimize sum_k chi_k(id) y_k  s.t.  -sum_k chi_k(i) y_k >= 1,
  // y >= 0; posed as a maximization for the same routine.
  std::vector<std::vector<Rational>> at(v, std::vector<Rational>(m));
  std::vector<Rational> bt(v, -1);
  std::vector<Rational> ct(m);
  for (size_t i = 0; i < v; ++i) {
    for (size_t k = 0; k < m; ++k) at[i][k] = problem.rows[k][i];
  }
  for (size_t k = 0; k < m; ++k) ct[k] = -Rational(problem.row_constant[k]);
  const LpSolution dual = MaximizeSimplex(at, bt, ct);
  result.pivots += dual.pivots;
  if (dual.status != LpStatus::kOptimal) return result;

  result.raw_optimum = 1 + primal.objective;
  result.dual_optimum = 1 - dual.objective;
  result.certificate = dual.x;
  result.inner_distribution.assign(table.size(), 0);
  result.inner_distribution[0] = 1;
  for (size_t i = 0; i < v; ++i) {
    result.inner_distribution[problem.free_classes[i]] = primal.x[i];
  }
  if (result.raw_optimum != result.dual_optimum) return result;
  result.floored_bound =
      Floor(result.raw_optimum + Rational(1, 1000000)).convert_to<int64_t>();
  result.status = BoundStatus::kOptimal;
  return result;
}

}  // namespace permcode
