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

#ifndef PERMCODE_CHARACTER_TABLE_H_
#define PERMCODE_CHARACTER_TABLE_H_

#include <cstdint>
#include <vector>

#include "permcode/partition.h"

namespace permcode {

// chi_lambda(mu) by the Murnaghan-Nakayama rule. Throws std::invalid_argument
// when the two partitions have different sizes.
int64_t Character(const Partition& lambda, const Partition& mu);

// The exact character table of Sym(n), 1 <= n <= kMaxDegree.
//
// Columns (classes) follow the canonical order of Partitions(n): class 0 is
// 1^n, the identity. Rows (irreducible characters) follow the reverse order,
// so character 0 is the trivial character [n] and the last row is the sign
// character 1^n. Immutable after construction.
class CharacterTable {
 public:
  explicit CharacterTable(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(classes_.size()); }

  const std::vector<Partition>& classes() const { return classes_; }
  const std::vector<Partition>& characters() const { return characters_; }

  int64_t value(int character, int cls) const {
    return values_[character * size() + cls];
  }
  int64_t degree(int character) const { return value(character, 0); }
  int64_t class_size(int cls) const { return class_sizes_[cls]; }
  int64_t centralizer_size(int cls) const { return centralizer_sizes_[cls]; }

  // Position of `mu` in classes(); throws std::invalid_argument if absent.
  int ClassIndex(const Partition& mu) const;
  int CharacterIndex(const Partition& lambda) const;

  // sum_chi chi(mu): the number of square roots of an element of class mu
  // (every Frobenius-Schur indicator of Sym(n) is 1).
  int64_t SquareRootCount(int cls) const;

 private:
  int n_;
  std::vector<Partition> classes_;
  std::vector<Partition> characters_;
  std::vector<int64_t> values_;
  std::vector<int64_t> class_sizes_;
  std::vector<int64_t> centralizer_sizes_;
};

}  // namespace permcode

#endif  // PERMCODE_CHARACTER_TABLE_H_
