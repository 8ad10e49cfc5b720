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

#ifndef PERMCODE_PARTITION_H_
#define PERMCODE_PARTITION_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace permcode {

// Largest degree any part of the library accepts.
inline constexpr int kMaxDegree = 8;

// n! for 0 <= n <= 20.
int64_t Factorial(int n);

// An integer partition of n, parts stored in weakly decreasing order.
// Partitions label both conjugacy classes (by cycle type) and irreducible
// characters of Sym(n).
class Partition {
 public:
  Partition() = default;
  // Sorts `parts` descending. Throws std::invalid_argument on a non-positive
  // part or an empty list.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int NumParts() const { return static_cast<int>(parts_.size()); }
  // Number of parts equal to `part`.
  int Multiplicity(int part) const;
  // The transposed Young diagram.
  Partition Conjugate() const;
  // "3,2,1" style.
  std::string ToString() const;

  // Lexicographic on the parts; 1^n is the smallest partition of n.
  auto operator<=>(const Partition& other) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// All partitions of n in canonical order: lexicographically ascending on the
// descending part list, so 1^n comes first and [n] last. Class 0 is therefore
// the identity class. Throws std::out_of_range unless 1 <= n <= kMaxDegree.
std::vector<Partition> Partitions(int n);

// z_lambda = prod_j j^{m_j} m_j!, the centralizer order of any permutation of
// cycle type lambda.
int64_t CentralizerSize(const Partition& lambda);

// n!/z_lambda.
int64_t ClassSize(const Partition& lambda);

// Number of points moved by a permutation of this cycle type, i.e. the
// Hamming distance from the identity: n minus the number of 1-parts.
int HammingWeight(const Partition& lambda);

}  // namespace permcode

#endif  // PERMCODE_PARTITION_H_
