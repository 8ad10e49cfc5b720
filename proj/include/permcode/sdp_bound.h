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

#ifndef PERMCODE_SDP_BOUND_H_
#define PERMCODE_SDP_BOUND_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "Eigen/Dense"
#include "permcode/block_diag.h"
#include "permcode/pair_orbits.h"
#include "permcode/rational.h"
#include "permcode/sdp_solver.h"

namespace permcode {

// Square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int dim)
      : dim_(dim), data_(static_cast<size_t>(dim) * dim) {}

  int dim() const { return dim_; }
  Rational& operator()(int i, int j) {
    return data_[static_cast<size_t>(i) * dim_ + j];
  }
  const Rational& operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * dim_ + j];
  }
  bool operator==(const RationalMatrix& other) const = default;
  Eigen::MatrixXd ToDouble() const;

 private:
  int dim_ = 0;
  std::vector<Rational> data_;
};

// R and R' of a code, averaged over the isometries of Sym(n) that do (R) or
// do not (R') carry some codeword to id. Dense and exact; n <= 5.
struct CodeWitness {
  std::vector<int> code;
  RationalMatrix r;
  // Empty when not requested.
  RationalMatrix r_prime;
};

// `code` holds permutation ranks. Throws std::invalid_argument for an empty
// code, repeated or out-of-range ranks, n > 5, or when R' is requested for
// the whole group (no isometry misses id).
CodeWitness WitnessMatrices(const SymmetricGroup& group,
                            std::span<const int> code, bool with_prime = true);

// a_l = |{(t, u, v) in code^3 : (t^-1 u, t^-1 v) in O_l}| / (|code| |O_l|),
// indexed by l - 1; a_1 = 1.
std::vector<Rational> CoefficientsFromCode(const OrbitIndex& index,
                                           std::span<const int> code);

// How B'_l is formed for the orbits {id} x C_j, C_j x {id} and the diagonal
// of C_j (the set I_1).
//
// kLiteral follows the displayed three-case rule: B'_l(phi, psi) = 1 when
// (phi psi^-1, id) lies in O_l and -1 on the diagonal when (phi, id) does.
// That leaves the two off-diagonal identity orbits uncancelled and does not
// reproduce R'.
//
// kCorrected puts the whole class-j correction on C_j x {id}:
//   B'_{C_j x id} = A_j - B_{id x C_j} - B_{C_j x id} - B_{diag C_j},
// and zero on the other two. It equals the literal rule minus the two
// off-diagonal identity orbits, and is exact whenever the three coefficients
// agree, which holds for every code.
enum class BPrimeRule { kCorrected, kLiteral };

struct BPrimeSet {
  // Indexed by l - 1; entry 0 (orbit 1) is unused.
  std::vector<bool> in_i1;
  // B'_l as a signed combination of orbit matrices.
  std::vector<std::vector<std::pair<OrbitId, int>>> terms;
};

BPrimeSet BuildBPrime(const OrbitIndex& index,
                      BPrimeRule rule = BPrimeRule::kCorrected);

// B_1 + sum_l a_l B_l and (I - B_1) + sum_l a_l B'_l, exactly. n <= 5.
RationalMatrix ExpandR(const OrbitIndex& index, std::span<const Rational> a);
RationalMatrix ExpandRPrime(const OrbitIndex& index, const BPrimeSet& bprime,
                            std::span<const Rational> a);

enum class SdpMode { kFull, kBlock };

const char* ToString(SdpMode mode);

struct SdpAssembleOptions {
  SdpMode mode = SdpMode::kBlock;
  // Gives l and its transpose separate variables, each multiplying
  // (B_l + B_l^T) / 2. Same optimum; used to check the merged form.
  bool split_transpose = false;
  BPrimeRule rule = BPrimeRule::kCorrected;
  // When false, the diagonal orbit of each class gets its own variable
  // instead of sharing one with {id} x C_j and C_j x {id}.
  bool tie_identity_orbits = true;
  // Full mode is capped at n = 5 unless this is set (n = 6 needs tens of GB
  // and hours).
  bool allow_slow = false;
};

// One SDP variable. The identity orbits of a class share a variable, since
// R(id, phi) = R(phi, id) = R(phi, phi) for every code.
struct SdpVariable {
  std::vector<OrbitId> orbits;
  // Coefficient of the variable in R_1 is sum_l weight * B_l over `orbits`.
  double weight = 1;
  // Contribution to Tr(R_1).
  int64_t trace = 0;
};

struct SdpProblem {
  int n = 0;
  std::vector<int> distances;
  SdpMode mode = SdpMode::kBlock;
  std::vector<SdpVariable> variables;
  // Orbits l >= 2 fixed to zero because a class they touch has a weight
  // outside D.
  std::vector<OrbitId> forced_zero;
  // Constant blocks removed during assembly (all PSD).
  int dropped_blocks = 0;
  // maximize 1 + sum trace_i y_i subject to the R_1 and R_2 blocks and the
  // box 0 <= y <= 1.
  SdpInstance instance;
};

// Dense n! x n! form. Throws CapacityError beyond n = 5 (n = 6 with
// allow_slow).
SdpProblem AssembleSdp(const OrbitIndex& index, std::span<const int> distances,
                       const SdpAssembleOptions& options = {});
// Block form built from basic blocks; options.mode is ignored.
SdpProblem AssembleSdp(const BasicBlockSet& blocks,
                       std::span<const int> distances,
                       const SdpAssembleOptions& options = {});

struct SdpBoundResult {
  SdpStatus status = SdpStatus::kNumericalFailure;
  double raw_optimum = 0;
  double dual_objective = 0;
  // floor(raw_optimum + 1e-5).
  int64_t floored_bound = 0;
  double relative_gap = 0;
  double primal_infeasibility = 0;
  double dual_infeasibility = 0;
  int iterations = 0;
  int num_variables = 0;
  // Per solver block: label and smallest eigenvalue at the returned point.
  std::vector<std::pair<std::string, double>> min_eigenvalues;
  std::string message;
  Eigen::VectorXd y;
};

SdpBoundResult SolveSdpBound(const SdpProblem& problem,
                             const SdpOptions& options = {});

// Writes problem.instance in SDPA sparse format. Throws std::runtime_error
// when the file cannot be written.
void ExportSdpa(const SdpProblem& problem, const std::string& path);

// Maps per-orbit coefficients (indexed by l - 1) to variable values. Throws
// std::invalid_argument when orbits sharing a variable disagree or a forced
// orbit is nonzero.
Eigen::VectorXd VariableValues(const SdpProblem& problem,
                               std::span<const Rational> a);

struct SdpPoint {
  double objective = 0;
  // Smallest eigenvalue per solver block, then the smallest box slack.
  std::vector<double> min_eigenvalues;
  bool Feasible(double tolerance) const;
};

SdpPoint EvaluateSdp(const SdpProblem& problem, const Eigen::VectorXd& y);

}  // namespace permcode

#endif  // PERMCODE_SDP_BOUND_H_
