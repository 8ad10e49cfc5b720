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

#ifndef PERMCODE_SIMPLEX_H_
#define PERMCODE_SIMPLEX_H_

#include <vector>

#include "permcode/rational.h"

namespace permcode {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kPivotLimit };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective = 0;
  std::vector<Rational> x;
  int pivots = 0;
};

// Dense two-phase tableau simplex in exact arithmetic with Bland's rule:
//
//   maximize c^T x  subject to  A x <= b,  x >= 0.
//
// b may have any sign. `a` is row-major, one row per constraint.
LpSolution MaximizeSimplex(const std::vector<std::vector<Rational>>& a,
                           const std::vector<Rational>& b,
                           const std::vector<Rational>& c,
                           int pivot_limit = 100000);

}  // namespace permcode

#endif  // PERMCODE_SIMPLEX_H_
