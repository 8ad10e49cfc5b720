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

#ifndef PERMCODE_SDP_SOLVER_H_
#define PERMCODE_SDP_SOLVER_H_

#include <string>
#include <vector>

#include "Eigen/Dense"

namespace permcode {

// maximize  c^T y + offset
// subject to  C_b + sum_i y_i A_{b,i} >= 0 (PSD) for every dense block b,
//             c_d + sum_i y_i a_{d,i} >= 0 (entrywise) for every diagonal
//             block d.
struct DenseSdpBlock {
  std::string label;
  int dim = 0;
  Eigen::MatrixXd constant;
  // Variables with a nonzero coefficient in this block, ascending, and their
  // coefficient matrices: column j is the column-major vec of A_{vars[j]}.
  std::vector<int> vars;
  Eigen::MatrixXd coef;

  Eigen::MatrixXd Coefficient(int j) const;
  Eigen::MatrixXd Evaluate(const Eigen::VectorXd& y) const;
};

struct DiagonalSdpBlock {
  struct Entry {
    int var;
    int row;
    double value;
  };
  std::string label;
  int dim = 0;
  Eigen::VectorXd constant;
  std::vector<Entry> entries;

  Eigen::VectorXd Evaluate(const Eigen::VectorXd& y) const;
};

struct SdpInstance {
  int num_vars = 0;
  Eigen::VectorXd objective;
  double objective_offset = 0;
  std::vector<DenseSdpBlock> dense;
  std::vector<DiagonalSdpBlock> diagonal;

  // Adds A (dim x dim, symmetric) as the coefficient of `var` in dense block
  // b. Coefficients must be added in ascending variable order.
  static void AppendCoefficient(DenseSdpBlock& block, int var,
                                const Eigen::MatrixXd& a);
};

struct SdpOptions {
  double tolerance = 1e-8;
  int max_iterations = 200;
  // Stop once the worst of the four stopping measures has not improved by
  // 10% for this many iterations.
  int stall_iterations = 20;
  // A run that stops before `tolerance` is reached still reports its best
  // iterate as near-optimal if every measure is below this.
  double relaxed_tolerance = 1e-6;
  bool verbose = false;
};

enum class SdpStatus { kOptimal, kNearOptimal, kNumericalFailure };

// Both optimal and near-optimal solutions are usable.
inline bool Converged(SdpStatus status) {
  return status != SdpStatus::kNumericalFailure;
}

const char* ToString(SdpStatus status);

struct SdpSolution {
  SdpStatus status = SdpStatus::kNumericalFailure;
  // c^T y + offset at the returned y, and its dual counterpart
  // tr(C X) + offset.
  double primal_objective = 0;
  double dual_objective = 0;
  double relative_gap = 0;
  double primal_infeasibility = 0;
  double dual_infeasibility = 0;
  int iterations = 0;
  Eigen::VectorXd y;
  // Smallest eigenvalue of C_b + sum y_i A_{b,i} per dense block, then the
  // smallest entry of each diagonal block.
  std::vector<double> min_eigenvalues;
  std::string message;
};

// Infeasible primal-dual path following with the HKM direction and Mehrotra
// predictor-corrector steps.
SdpSolution SolveSdp(const SdpInstance& instance,
                     const SdpOptions& options = {});

}  // namespace permcode

#endif  // PERMCODE_SDP_SOLVER_H_
