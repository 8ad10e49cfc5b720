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

#ifndef PERMCODE_PERMUTATION_H_
#define PERMCODE_PERMUTATION_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "permcode/partition.h"

namespace permcode {

// A permutation of {0, ..., n-1}, n <= kMaxDegree. The public constructors
// take one-based images to match single-line notation; internally images
// are zero-based.
//
// Composition follows function notation: (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;

  static Permutation Identity(int n);
  // `images` is single-line notation over {1..n}. Throws std::invalid_argument
  // unless it is a bijection.
  static Permutation FromImages(std::span<const int> images);
  // Inverse of Rank(). Throws std::out_of_range unless 0 <= rank < n!.
  static Permutation Unrank(int64_t rank, int n);

  int degree() const { return n_; }
  // Zero-based image of zero-based point x.
  int operator()(int x) const { return images_[x]; }

  // Lehmer-code rank in [0, n!); Rank(Identity) == 0.
  int64_t Rank() const;
  Permutation Inverse() const;
  Partition CycleType() const;
  bool IsIdentity() const;
  // One-based single-line notation.
  std::vector<int> Images() const;

  Permutation operator*(const Permutation& other) const;
  bool operator==(const Permutation& other) const = default;

 private:
  std::array<uint8_t, kMaxDegree> images_{};
  int n_ = 0;
};

}  // namespace permcode

#endif  // PERMCODE_PERMUTATION_H_
