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

#ifndef PERMCODE_ERRORS_H_
#define PERMCODE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace permcode {

// Raised when an exact computation produces a value that theory says cannot
// occur (a non-integral structure constant, a block of the wrong dimension).
// Always indicates a bug upstream, never bad user input.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// Raised when a request is well formed but exceeds what this library will
// materialize (orbit enumeration at n >= 8, dense algebras at large n).
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace permcode

#endif  // PERMCODE_ERRORS_H_
