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

#include "permcode/conjugacy_scheme.h"

#include <string>

#include "permcode/errors.h"
#include "permcode/rational.h"

namespace permcode {

int64_t StructureConstant(const CharacterTable& table, int i, int j, int k) {
  Rational sum = 0;
  for (int x = 0; x < table.size(); ++x) {
    const BigInt num =
        BigInt(table.value(x, i)) * table.value(x, j) * table.value(x, k);
    sum += Rational(num, BigInt(table.degree(x)));
  }
  sum *= Rational(BigInt(table.class_size(i)) * table.class_size(j),
                  BigInt(Factorial(table.n())));
  if (boost::multiprecision::denominator(sum) != 1 || sum < 0) {
    throw ConsistencyError("structure constant p_" + std::to_string(i) + "," +
                           std::to_string(j) + "^" + std::to_string(k) +
                           " = " + ToString(sum) +
                           " is not a non-negative integer");
  }
  return boost::multiprecision::numerator(sum).convert_to<int64_t>();
}

ConjugacyScheme::ConjugacyScheme(const CharacterTable& table) : table_(table) {
  const int m = size();
  p_.resize(static_cast<size_t>(m) * m * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        p_[(static_cast<size_t>(i) * m + j) * m + k] =
            StructureConstant(table_, i, j, k);
      }
    }
  }
  q_.resize(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int x = 0; x < m; ++x) {
      q_[i * m + x] = table_.degree(x) * table_.value(x, i);
    }
  }
  for (int i = 0; i < m; ++i) weights_.push_back(HammingWeight(table_.classes()[i]));
}

}  // namespace permcode
