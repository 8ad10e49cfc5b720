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

#ifndef PERMCODE_CONJUGACY_SCHEME_H_
#define PERMCODE_CONJUGACY_SCHEME_H_

#include <cstdint>
#include <vector>

#include "permcode/character_table.h"

namespace permcode {

// The conjugacy association scheme of Sym(n): relation i holds between
// phi and psi when phi psi^{-1} lies in class i. Indices follow the
// CharacterTable conventions (class 0 = identity, character 0 = trivial).
class ConjugacyScheme {
 public:
  // Computes the full intersection-number tensor from the character sum.
  explicit ConjugacyScheme(const CharacterTable& table);

  int n() const { return table_.n(); }
  int size() const { return table_.size(); }
  const CharacterTable& table() const { return table_; }

  // p_ij^k: for fixed theta in class k, the number of (phi, psi) in
  // C_i x C_j with phi psi = theta.
  int64_t structure_constant(int i, int j, int k) const {
    return p_[(static_cast<size_t>(i) * size() + j) * size() + k];
  }
  // Q(i, j) = chi_j(id) chi_j(phi_i).
  int64_t second_eigenmatrix(int cls, int character) const {
    return q_[cls * size() + character];
  }
  // d_H(id, phi_i).
  int weight(int cls) const { return weights_[cls]; }

 private:
  CharacterTable table_;
  std::vector<int64_t> p_;
  std::vector<int64_t> q_;
  std::vector<int> weights_;
};

// (|C_i||C_j|/n!) sum_chi chi(i) chi(j) chi(k) / chi(id), evaluated exactly.
// Throws ConsistencyError if the sum is not a non-negative integer.
int64_t StructureConstant(const CharacterTable& table, int i, int j, int k);

}  // namespace permcode

#endif  // PERMCODE_CONJUGACY_SCHEME_H_
