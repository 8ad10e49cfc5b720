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

#ifndef PERMCODE_EXPECTED_TABLES_H_
#define PERMCODE_EXPECTED_TABLES_H_

#include <cstdint>
#include <optional>
#include <vector>

namespace permcode {

// Published values compiled in from data/expected_tables.json.
struct OrbitCountRow {
  int n;
  int64_t order;
  int64_t b;
  int64_t b_swap;
};

struct BoundRow {
  std::vector<int> distances;
  int64_t sdp;
  int64_t lp;
  int64_t product;
  // Set when the published product is an arithmetic slip; holds the true
  // product of the distances.
  std::optional<int64_t> corrected_product;
};

struct MultiplicityRow {
  int n;
  std::vector<int> m;  // sorted ascending
};

struct ExpectedTables {
  std::vector<OrbitCountRow> table1;
  std::vector<BoundRow> table2;  // n = 6
  std::vector<MultiplicityRow> table3;
  std::vector<BoundRow> table4;  // n = 7
};

const ExpectedTables& GetExpectedTables();

}  // namespace permcode

#endif  // PERMCODE_EXPECTED_TABLES_H_
