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

#include "permcode/partition.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace permcode {

int64_t Factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("Factorial: n out of range");
  int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("Partition: no parts");
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("Partition: non-positive part");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::Multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::Conjugate() const {
  std::vector<int> conj(parts_.front(), 0);
  for (int p : parts_) {
    for (int c = 0; c < p; ++c) ++conj[c];
  }
  return Partition(std::move(conj));
}

std::string Partition::ToString() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

void Generate(int remaining, int max_part, std::vector<int>& prefix,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    Generate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> Partitions(int n) {
  if (n < 1 || n > kMaxDegree) {
    throw std::out_of_range("Partitions: n must lie in [1, " +
                            std::to_string(kMaxDegree) + "]");
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  Generate(n, n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

int64_t CentralizerSize(const Partition& lambda) {
  int64_t z = 1;
  for (int j = 1; j <= lambda.n(); ++j) {
    const int m = lambda.Multiplicity(j);
    for (int t = 0; t < m; ++t) z *= j;
    z *= Factorial(m);
  }
  return z;
}

int64_t ClassSize(const Partition& lambda) {
  return Factorial(lambda.n()) / CentralizerSize(lambda);
}

int HammingWeight(const Partition& lambda) {
  return lambda.n() - lambda.Multiplicity(1);
}

}  // namespace permcode
