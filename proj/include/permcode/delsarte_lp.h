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

#ifndef PERMCODE_DELSARTE_LP_H_
#define PERMCODE_DELSARTE_LP_H_

#include <cstdint>
#include <span>
#include <vector>

#include "permcode/character_table.h"
#include "permcode/rational.h"

namespace permcode {

// A validated distance set D, sorted, each element in [2, n].
// Throws std::invalid_argument otherwise (0 and 1 are never distances).
std::vector<int> ValidateDistances(int n, std::span<const int> distances);

// {dmin, ..., n}.
std::vector<int> DistancesFrom(int n, int dmin);

// prod_{d in D} d; 1 for the empty set.
int64_t TrivialProductBound(std::span<const int> distances);

// The Delsarte LP over inner distributions a = (a_0, ..., a_{m-1}):
//
//   maximize    a_0 + ... + a_{m-1}
//   subject to  sum_i a_i chi_k(phi_i) >= 0   for every character k,
//               a_0 = 1, a_i >= 0,
//               a_i = 0 when d_H(id, phi_i) is not in D.
struct LpProblem {
  int n = 0;
  std::vector<int> distances;
  // Class indices i != 0 whose weight lies in D; one LP variable each.
  std::vector<int> free_classes;
  // Per character k: the constant chi_k(id) (from a_0 = 1) and the
  // coefficient chi_k(phi_i) of each free variable.
  std::vector<int64_t> row_constant;
  std::vector<std::vector<int64_t>> rows;
};

enum class BoundStatus { kOptimal, kInfeasible, kNumericalFailure };

const char* ToString(BoundStatus status);

struct LpBoundResult {
  BoundStatus status = BoundStatus::kNumericalFailure;
  Rational raw_optimum = 0;
  // floor(raw_optimum + 1e-6).
  int64_t floored_bound = 0;
  // Optimal inner distribution, one entry per class (a_0 = 1).
  std::vector<Rational> inner_distribution;
  // Optimal multipliers y_k >= 0 of the character constraints, obtained by
  // solving the dual LP independently; their objective equals raw_optimum.
  std::vector<Rational> certificate;
  Rational dual_optimum = 0;
  int pivots = 0;
};

LpProblem BuildLp(const CharacterTable& table, std::span<const int> distances);

LpBoundResult SolveLp(const LpProblem& problem, const CharacterTable& table);

}  // namespace permcode

#endif  // PERMCODE_DELSARTE_LP_H_
