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

#include "permcode/permutation.h"

#include <stdexcept>
#include <string>

namespace permcode {

Permutation Permutation::Identity(int n) {
  if (n < 1 || n > kMaxDegree) {
    throw std::out_of_range("Permutation: degree out of range");
  }
  Permutation p;
  p.n_ = n;
  for (int i = 0; i < n; ++i) p.images_[i] = static_cast<uint8_t>(i);
  return p;
}

Permutation Permutation::FromImages(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1 || n > kMaxDegree) {
    throw std::invalid_argument("Permutation: degree out of range");
  }
  Permutation p;
  p.n_ = n;
  unsigned seen = 0;
  for (int i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || v > n || (seen & (1u << v))) {
      throw std::invalid_argument("Permutation: images are not a bijection");
    }
    seen |= 1u << v;
    p.images_[i] = static_cast<uint8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::Unrank(int64_t rank, int n) {
  const int64_t total = Factorial(n);
  if (rank < 0 || rank >= total) {
    throw std::out_of_range("Unrank: rank " + std::to_string(rank) +
                            " outside [0, " + std::to_string(total) + ")");
  }
  Permutation p;
  p.n_ = n;
  std::array<uint8_t, kMaxDegree> pool{};
  for (int i = 0; i < n; ++i) pool[i] = static_cast<uint8_t>(i);
  int pool_size = n;
  for (int i = 0; i < n; ++i) {
    const int64_t f = Factorial(n - 1 - i);
    const int code = static_cast<int>(rank / f);
    rank %= f;
    p.images_[i] = pool[code];
    for (int j = code; j + 1 < pool_size; ++j) pool[j] = pool[j + 1];
    --pool_size;
  }
  return p;
}

int64_t Permutation::Rank() const {
  int64_t rank = 0;
  for (int i = 0; i < n_; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n_; ++j) smaller += images_[j] < images_[i];
    rank = rank * (n_ - i) + smaller;
  }
  return rank;
}

Permutation Permutation::Inverse() const {
  Permutation inv;
  inv.n_ = n_;
  for (int i = 0; i < n_; ++i) inv.images_[images_[i]] = static_cast<uint8_t>(i);
  return inv;
}

Partition Permutation::CycleType() const {
  std::vector<int> lengths;
  unsigned seen = 0;
  for (int i = 0; i < n_; ++i) {
    if (seen & (1u << i)) continue;
    int len = 0;
    for (int x = i; !(seen & (1u << x)); x = images_[x]) {
      seen |= 1u << x;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

bool Permutation::IsIdentity() const {
  for (int i = 0; i < n_; ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<int> Permutation::Images() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = images_[i] + 1;
  return out;
}

Permutation Permutation::operator*(const Permutation& other) const {
  Permutation c;
  c.n_ = n_;
  for (int i = 0; i < n_; ++i) c.images_[i] = images_[other.images_[i]];
  return c;
}

}  // namespace permcode
