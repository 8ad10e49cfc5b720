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

#include "permcode/expected_tables.h"

#include <string_view>

#include "json.hpp"

namespace permcode {

extern const std::string_view kExpectedTablesJson;

namespace {

std::vector<BoundRow> ParseBoundRows(const nlohmann::json& rows) {
  std::vector<BoundRow> out;
  for (const auto& r : rows) {
    BoundRow row{r.at("D").get<std::vector<int>>(), r.at("sdp").get<int64_t>(),
                 r.at("lp").get<int64_t>(), r.at("product").get<int64_t>(),
                 std::nullopt};
    if (r.contains("corrected_product")) {
      row.corrected_product = r.at("corrected_product").get<int64_t>();
    }
    out.push_back(std::move(row));
  }
  return out;
}

ExpectedTables Parse() {
  const auto j = nlohmann::json::parse(kExpectedTablesJson);
  ExpectedTables t;
  for (const auto& r : j.at("table1")) {
    t.table1.push_back({r.at("n").get<int>(), r.at("order").get<int64_t>(),
                        r.at("b").get<int64_t>(), r.at("b_swap").get<int64_t>()});
  }
  t.table2 = ParseBoundRows(j.at("table2").at("rows"));
  for (const auto& r : j.at("table3")) {
    t.table3.push_back({r.at("n").get<int>(), r.at("m").get<std::vector<int>>()});
  }
  t.table4 = ParseBoundRows(j.at("table4").at("rows"));
  return t;
}

}  // namespace

const ExpectedTables& GetExpectedTables() {
  static const ExpectedTables tables = Parse();
  return tables;
}

}  // namespace permcode
