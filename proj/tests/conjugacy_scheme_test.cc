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

#include <vector>

#include "gtest/gtest.h"
#include "permcode/conjugacy_scheme.h"
#include "permcode/symmetric_group.h"

namespace permcode {
namespace {

// For fixed theta in C_k, count (phi, psi) in C_i x C_j with phi psi = theta.
int64_t CountPairs(const SymmetricGroup& g, int i, int j, int k) {
  const int theta = g.class_members(k).front();
  int64_t count = 0;
  for (int phi : g.class_members(i)) {
    for (int psi : g.class_members(j)) count += g.Multiply(phi, psi) == theta;
  }
  return count;
}

TEST(ConjugacySchemeTest, IdentityColumn) {
  for (int n = 2; n <= 7; ++n) {
    const ConjugacyScheme s{CharacterTable(n)};
    for (int i = 0; i < s.size(); ++i) {
      for (int j = 0; j < s.size(); ++j) {
        EXPECT_EQ(s.structure_constant(i, j, 0),
                  i == j ? s.table().class_size(i) : 0);
      }
    }
  }
}

TEST(ConjugacySchemeTest, TranspositionsIntoThreeCycle) {
  const SymmetricGroup g(3);
  const ConjugacyScheme s{g.table()};
  const int transpositions = g.table().ClassIndex(Partition({2, 1}));
  const int three_cycles = g.table().ClassIndex(Partition({3}));
  EXPECT_EQ(CountPairs(g, transpositions, transpositions, three_cycles), 3);
  EXPECT_EQ(s.structure_constant(transpositions, transpositions, three_cycles),
            3);
}

TEST(ConjugacySchemeTest, MatchesBruteForceUpToFour) {
  for (int n = 2; n <= 4; ++n) {
    const SymmetricGroup g(n);
    const ConjugacyScheme s{g.table()};
    for (int i = 0; i < s.size(); ++i) {
      for (int j = 0; j < s.size(); ++j) {
        for (int k = 0; k < s.size(); ++k) {
          EXPECT_EQ(s.structure_constant(i, j, k), CountPairs(g, i, j, k))
              << n << ": " << i << "," << j << "," << k;
        }
      }
    }
  }
}

TEST(ConjugacySchemeTest, SymmetryAndPairCounting) {
  for (int n = 2; n <= 6; ++n) {
    const ConjugacyScheme s{CharacterTable(n)};
    const auto& t = s.table();
    for (int i = 0; i < s.size(); ++i) {
      for (int j = 0; j < s.size(); ++j) {
        int64_t total = 0;
        for (int k = 0; k < s.size(); ++k) {
          EXPECT_EQ(s.structure_constant(i, j, k), s.structure_constant(j, i, k));
          total += s.structure_constant(i, j, k) * t.class_size(k);
        }
        EXPECT_EQ(total, t.class_size(i) * t.class_size(j));
      }
    }
  }
}

TEST(ConjugacySchemeTest, StructureConstantsAtEightAreIntegral) {
  // Exercises the wide accumulator; any non-integral value would throw.
  const CharacterTable t(8);
  for (int i = 0; i < t.size(); i += 3) {
    for (int j = 0; j < t.size(); j += 2) {
      for (int k = 0; k < t.size(); ++k) {
        EXPECT_GE(StructureConstant(t, i, j, k), 0);
      }
    }
  }
}

TEST(SecondEigenmatrixTest, SymThree) {
  const ConjugacyScheme s{CharacterTable(3)};
  const auto& t = s.table();
  // Rows: classes 1^3, 21, 3. Columns listed as trivial, sign, standard.
  const std::vector<int> columns = {t.CharacterIndex(Partition({3})),
                                    t.CharacterIndex(Partition({1, 1, 1})),
                                    t.CharacterIndex(Partition({2, 1}))};
  const int64_t expected[3][3] = {{1, 1, 4}, {1, -1, 0}, {1, 1, -2}};
  for (int i = 0; i < 3; ++i) {
    for (int c = 0; c < 3; ++c) {
      EXPECT_EQ(s.second_eigenmatrix(i, columns[c]), expected[i][c]);
    }
  }
}

TEST(SecondEigenmatrixTest, RowAndColumnIdentities) {
  for (int n = 2; n <= 8; ++n) {
    const ConjugacyScheme s{CharacterTable(n)};
    const auto& t = s.table();
    int64_t row0 = 0;
    for (int j = 0; j < s.size(); ++j) {
      EXPECT_EQ(s.second_eigenmatrix(0, j), t.degree(j) * t.degree(j));
      row0 += s.second_eigenmatrix(0, j);
    }
    EXPECT_EQ(row0, Factorial(n));
    for (int i = 0; i < s.size(); ++i) EXPECT_EQ(s.second_eigenmatrix(i, 0), 1);
    // sum_i |C_i| Q(i,j) Q(i,j') = n! chi_j(id)^2 [j = j'].
    for (int j = 0; j < s.size(); ++j) {
      for (int jp = 0; jp < s.size(); ++jp) {
        int64_t sum = 0;
        for (int i = 0; i < s.size(); ++i) {
          sum += t.class_size(i) * s.second_eigenmatrix(i, j) *
                 s.second_eigenmatrix(i, jp);
        }
        EXPECT_EQ(sum, j == jp ? Factorial(n) * t.degree(j) * t.degree(j) : 0);
      }
    }
  }
}

TEST(HammingWeightTest, Examples) {
  EXPECT_EQ(HammingWeight(Partition({1, 1, 1, 1})), 0);
  EXPECT_EQ(HammingWeight(Partition({2, 1, 1, 1})), 2);
  EXPECT_EQ(HammingWeight(Partition({3, 2, 2})), 7);
  for (int n = 2; n <= 8; ++n) {
    const ConjugacyScheme s{CharacterTable(n)};
    EXPECT_EQ(s.weight(0), 0);
    for (int i = 0; i < s.size(); ++i) EXPECT_NE(s.weight(i), 1);
  }
}

}  // namespace
}  // namespace permcode
