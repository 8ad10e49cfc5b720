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

#ifndef PERMCODE_SDPA_FORMAT_H_
#define PERMCODE_SDPA_FORMAT_H_

#include <istream>
#include <ostream>

#include "permcode/sdp_solver.h"

namespace permcode {

// Writes the instance in SDPA sparse format,
//   minimize  sum_i c'_i x_i  subject to  sum_i F_i x_i - F_0 >= 0,
// with x = y, c' = -c, F_0 = -C and F_i = A_i. Diagonal blocks get negative
// sizes and follow the dense blocks. The objective offset and block labels
// are carried in leading comment lines.
void WriteSdpa(const SdpInstance& instance, std::ostream& out);

// Inverse of WriteSdpa. Accepts the usual `{ } , ( )` separators. Throws
// std::runtime_error on malformed input.
SdpInstance ReadSdpa(std::istream& in);

}  // namespace permcode

#endif  // PERMCODE_SDPA_FORMAT_H_
