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

#include "permcode/symmetric_group.h"

#include <string>

#include "permcode/errors.h"

namespace permcode {

SymmetricGroup::SymmetricGroup(int n) : n_(n), table_(n) {
  if (n > kMaxTabulatedDegree) {
    throw CapacityError("SymmetricGroup: n = " + std::to_string(n) +
                        " exceeds the tabulated limit of " +
                        std::to_string(kMaxTabulatedDegree));
  }
  order_ = static_cast<int>(Factorial(n));
  elements_.reserve(order_);
  class_of_.resize(order_);
  inverse_.resize(order_);
  position_.resize(order_);
  members_.resize(table_.size());
  for (int r = 0; r < order_; ++r) elements_.push_back(Permutation::Unrank(r, n));
  for (int r = 0; r < order_; ++r) {
    const int cls = table_.ClassIndex(elements_[r].CycleType());
    class_of_[r] = cls;
    position_[r] = static_cast<int>(members_[cls].size());
    members_[cls].push_back(r);
    inverse_[r] = static_cast<int>(elements_[r].Inverse().Rank());
  }
}

int SymmetricGroup::Multiply(int a, int b) const {
  return static_cast<int>((elements_[a] * elements_[b]).Rank());
}

int SymmetricGroup::Quotient(int a, int b) const {
  return static_cast<int>((elements_[a] * elements_[inverse_[b]]).Rank());
}

const uint16_t* SymmetricGroup::ConjugationRow(int beta) const {
  std::call_once(conjugation_once_, [this] {
    conjugation_.resize(static_cast<size_t>(order_) * order_);
    for (int b = 0; b < order_; ++b) {
      const Permutation& beta_p = elements_[b];
      const Permutation beta_inv = beta_p.Inverse();
      uint16_t* row = &conjugation_[static_cast<size_t>(b) * order_];
      for (int phi = 0; phi < order_; ++phi) {
        row[phi] =
            static_cast<uint16_t>((beta_inv * elements_[phi] * beta_p).Rank());
      }
    }
  });
  return &conjugation_[static_cast<size_t>(beta) * order_];
}

}  // namespace permcode
