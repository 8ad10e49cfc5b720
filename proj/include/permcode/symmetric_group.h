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

#ifndef PERMCODE_SYMMETRIC_GROUP_H_
#define PERMCODE_SYMMETRIC_GROUP_H_

#include <cstdint>
#include <mutex>
#include <vector>

#include "permcode/character_table.h"
#include "permcode/permutation.h"

namespace permcode {

// Sym(n) materialized by Lehmer rank, for n <= kMaxTabulatedDegree. Elements
// are addressed by rank everywhere downstream; this class owns the lookup
// tables that make rank arithmetic cheap.
class SymmetricGroup {
 public:
  static constexpr int kMaxTabulatedDegree = 7;

  // Throws CapacityError for n > kMaxTabulatedDegree.
  explicit SymmetricGroup(int n);

  int n() const { return n_; }
  int order() const { return order_; }
  const CharacterTable& table() const { return table_; }
  int num_classes() const { return table_.size(); }

  const Permutation& element(int rank) const { return elements_[rank]; }
  int class_of(int rank) const { return class_of_[rank]; }
  int inverse_of(int rank) const { return inverse_[rank]; }
  const std::vector<int>& class_members(int cls) const {
    return members_[cls];
  }
  // Index of `rank` inside class_members(class_of(rank)).
  int position_in_class(int rank) const { return position_[rank]; }

  int Multiply(int a, int b) const;
  // rank of a * b^{-1}.
  int Quotient(int a, int b) const;

  // rank of beta^{-1} phi beta. Backed by an order() x order() table built on
  // first use (50 MB at n = 7); thread-safe.
  int Conjugate(int beta, int phi) const {
    return ConjugationRow(beta)[phi];
  }
  const uint16_t* ConjugationRow(int beta) const;

 private:
  int n_;
  int order_;
  CharacterTable table_;
  std::vector<Permutation> elements_;
  std::vector<int> class_of_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> members_;
  std::vector<int> position_;

  mutable std::once_flag conjugation_once_;
  mutable std::vector<uint16_t> conjugation_;
};

}  // namespace permcode

#endif  // PERMCODE_SYMMETRIC_GROUP_H_
