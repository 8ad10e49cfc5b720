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

#ifndef PERMCODE_RATIONAL_H_
#define PERMCODE_RATIONAL_H_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace permcode {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// floor(q), exact.
BigInt Floor(const Rational& q);

// "p/q", or "p" when the denominator is 1.
std::string ToString(const Rational& q);

double ToDouble(const Rational& q);

// Exact division that must leave no remainder; throws ConsistencyError
// naming `what` otherwise.
BigInt ExactDivide(const BigInt& num, const BigInt& den, const char* what);

}  // namespace permcode

#endif  // PERMCODE_RATIONAL_H_
