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

#include "permcode/rational.h"

#include "permcode/errors.h"

namespace permcode {

BigInt Floor(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt f = num / den;  // truncates toward zero
  if (num < 0 && f * den != num) f -= 1;
  return f;
}

std::string ToString(const Rational& q) {
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

double ToDouble(const Rational& q) { return q.convert_to<double>(); }

BigInt ExactDivide(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0 || num % den != 0) {
    throw ConsistencyError(std::string(what) + ": " + num.str() +
                           " is not divisible by " + den.str());
  }
  return num / den;
}

}  // namespace permcode
