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

#ifndef PERMCODE_CENTRALIZER_ALGEBRA_H_
#define PERMCODE_CENTRALIZER_ALGEBRA_H_

#include <cstdint>
#include <span>
#include <vector>

#include "permcode/pair_orbits.h"
#include "permcode/symmetric_group.h"

namespace permcode {

// An element of G = Sym(n) x <iota>, acting on Sym(n) by
// phi -> beta phi^{+-1} beta^{-1}. The vector action is
// (gamma x)(phi) = x(gamma^{-1} phi) = x(beta^{-1} phi^{+-1} beta).
struct GroupElement {
  int beta = 0;
  bool invert = false;
};

std::vector<double> ApplyGroupElement(const SymmetricGroup& group,
                                      GroupElement gamma,
                                      std::span<const double> x);

// Irreducible characters of G are chi_lambda (x) (trivial or sign of <iota>).
// Index k = 2 * lambda + (sign is negative), lambda in character-table order.
int NumGroupCharacters(const CharacterTable& table);
int GroupCharacterPartition(int k);
int GroupCharacterSign(int k);
int64_t GroupCharacterDegree(const CharacterTable& table, int k);
int64_t GroupCharacterValue(const CharacterTable& table, int k, int cls,
                            bool invert);

// Applies the primitive central idempotents
//   eps_k = (d_k / 2n!) sum_gamma chi_k(gamma) gamma^.
// Each call sums over G once, grouped by conjugacy class, and yields eps_k x
// for every k at the cost of two passes over Sym(n) x Sym(n).
class IdempotentAction {
 public:
  explicit IdempotentAction(const SymmetricGroup& group);

  std::vector<double> Apply(int k, std::span<const double> x) const;
  // Result indexed by k.
  std::vector<std::vector<double>> ApplyAll(std::span<const double> x) const;

 private:
  // sums[2 * c + t] = sum_{beta in C_c} (beta, iota^t)^ x.
  std::vector<std::vector<double>> ClassSums(std::span<const double> x) const;
  std::vector<double> Combine(
      int k, const std::vector<std::vector<double>>& sums) const;

  const SymmetricGroup& group_;
};

// Number of alpha in class `cls` fixed by gamma.
int64_t RestrictionCharacter(const SymmetricGroup& group, int cls,
                             GroupElement gamma);

struct MultiplicityTable {
  // Indexed by group character k.
  std::vector<int64_t> degree;
  std::vector<int64_t> multiplicity;
  // coefficient[k][l]: multiplicity of character k in the permutation module
  // on class l. Sums to multiplicity[k] over l.
  std::vector<std::vector<int64_t>> coefficient;

  // Nonzero multiplicities, sorted ascending.
  std::vector<int64_t> NonzeroMultiplicities() const;
};

// Exact; throws ConsistencyError on a non-integral coefficient.
MultiplicityTable Multiplicities(const SymmetricGroup& group);

// y = B_l x with (B_l x)(phi) = sum over (phi, psi) in O_l of x(psi).
std::vector<double> ApplyOrbitMatrix(const OrbitIndex& index, OrbitId l,
                                     std::span<const double> x);

struct TerwilligerResult {
  int dimension = 0;
  // Smallest relative residual accepted as a new direction and largest one
  // rejected as dependent; their ratio is the numerical rank gap.
  double smallest_accepted = 0;
  double largest_rejected = 0;
};

// Dimension of the algebra generated by the A_i and the diagonal class
// projections E'_i, by closing the span of generator words under left
// multiplication. Dense n! x n! arithmetic; n <= 5, else CapacityError.
TerwilligerResult TerwilligerDimensionDense(const SymmetricGroup& group);

// Same closure with every element stored by its value on each orbit of
// Sym(n)^2 (the algebra lies inside the centralizer algebra). n <= 6.
TerwilligerResult TerwilligerDimensionOrbit(const OrbitIndex& index);

}  // namespace permcode

#endif  // PERMCODE_CENTRALIZER_ALGEBRA_H_
