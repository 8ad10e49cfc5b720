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

#include "permcode/character_table.h"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace permcode {
namespace {

// Memo key: (shape still to be stripped, index of the next class part).
using MemoKey = std::pair<std::vector<int>, int>;

// Rim hooks are removed through the beta-set (first column hook lengths)
// picture: stripping an r-hook moves one bead from b to b - r, and the hook
// height is the number of beads jumped over.
int64_t StripHooks(const std::vector<int>& shape, const std::vector<int>& mu,
                   int next, std::map<MemoKey, int64_t>& memo) {
  if (next == static_cast<int>(mu.size())) return 1;
  MemoKey key{shape, next};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int len = static_cast<int>(shape.size());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = shape[i] + (len - 1 - i);

  const int r = mu[next];
  int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (int b : beta) jumped += (b > target && b < beta[i]);
    std::vector<int> moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<int>());
    std::vector<int> reduced;
    for (int j = 0; j < len; ++j) {
      const int part = moved[j] - (len - 1 - j);
      if (part > 0) reduced.push_back(part);
    }
    const int64_t sub = StripHooks(reduced, mu, next + 1, memo);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

int64_t Character(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) {
    throw std::invalid_argument("Character: partitions of different n");
  }
  std::map<MemoKey, int64_t> memo;
  return StripHooks(lambda.parts(), mu.parts(), 0, memo);
}

CharacterTable::CharacterTable(int n) : n_(n), classes_(Partitions(n)) {
  characters_.assign(classes_.rbegin(), classes_.rend());
  const int m = size();
  values_.resize(static_cast<size_t>(m) * m);
  for (int c = 0; c < m; ++c) {
    // The memo is keyed on the class parts, so it is shared per column.
    std::map<MemoKey, int64_t> memo;
    for (int x = 0; x < m; ++x) {
      values_[x * m + c] =
          StripHooks(characters_[x].parts(), classes_[c].parts(), 0, memo);
    }
    class_sizes_.push_back(ClassSize(classes_[c]));
    centralizer_sizes_.push_back(CentralizerSize(classes_[c]));
  }
}

int CharacterTable::ClassIndex(const Partition& mu) const {
  auto it = std::lower_bound(classes_.begin(), classes_.end(), mu);
  if (it == classes_.end() || *it != mu) {
    throw std::invalid_argument("ClassIndex: not a partition of n");
  }
  return static_cast<int>(it - classes_.begin());
}

int CharacterTable::CharacterIndex(const Partition& lambda) const {
  return size() - 1 - ClassIndex(lambda);
}

int64_t CharacterTable::SquareRootCount(int cls) const {
  int64_t s = 0;
  for (int x = 0; x < size(); ++x) s += value(x, cls);
  return s;
}

}  // namespace permcode
