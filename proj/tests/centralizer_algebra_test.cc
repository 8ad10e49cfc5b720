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

#include <cmath>
#include <memory>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "permcode/centralizer_algebra.h"
#include "permcode/errors.h"
#include "permcode/expected_tables.h"

namespace permcode {
namespace {

std::vector<double> RandomVector(int size, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  std::vector<double> x(size);
  for (double& v : x) v = dist(rng);
  return x;
}

double Distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

double Norm(const std::vector<double>& a) {
  return Distance(a, std::vector<double>(a.size(), 0.0));
}

TEST(GroupActionTest, IdentityAndInverse) {
  const SymmetricGroup g(4);
  const auto x = RandomVector(g.order(), 1);
  EXPECT_EQ(ApplyGroupElement(g, {0, false}, x), x);
  for (int beta = 0; beta < g.order(); beta += 5) {
    for (bool inv : {false, true}) {
      const auto y = ApplyGroupElement(g, {beta, inv}, x);
      EXPECT_EQ(ApplyGroupElement(g, {g.inverse_of(beta), inv}, y), x);
    }
  }
}

TEST(GroupActionTest, ClassIndicatorsAreInvariant) {
  const SymmetricGroup g(5);
  for (int c = 0; c < g.num_classes(); ++c) {
    std::vector<double> x(g.order(), 0.0);
    for (int phi : g.class_members(c)) x[phi] = 1;
    for (int beta = 0; beta < g.order(); beta += 7) {
      EXPECT_EQ(ApplyGroupElement(g, {beta, true}, x), x);
      EXPECT_EQ(ApplyGroupElement(g, {beta, false}, x), x);
    }
  }
}

// eps_k x by direct summation over G with permutation arithmetic only.
std::vector<double> IdempotentOracle(const SymmetricGroup& g, int k,
                                     const std::vector<double>& x) {
  const CharacterTable& t = g.table();
  std::vector<double> y(g.order(), 0.0);
  for (int beta = 0; beta < g.order(); ++beta) {
    const Permutation& b = g.element(beta);
    for (int inv = 0; inv < 2; ++inv) {
      const double chi =
          GroupCharacterValue(t, k, g.class_of(beta), inv == 1);
      for (int phi = 0; phi < g.order(); ++phi) {
        Permutation p = g.element(phi);
        if (inv) p = p.Inverse();
        const int src = static_cast<int>((b.Inverse() * p * b).Rank());
        y[phi] += chi * x[src];
      }
    }
  }
  const double scale = static_cast<double>(GroupCharacterDegree(t, k)) /
                       (2.0 * g.order());
  for (double& v : y) v *= scale;
  return y;
}

TEST(IdempotentTest, MatchesDirectSummation) {
  const SymmetricGroup g(3);
  const IdempotentAction eps(g);
  const auto x = RandomVector(g.order(), 2);
  for (int k = 0; k < NumGroupCharacters(g.table()); ++k) {
    EXPECT_LT(Distance(eps.Apply(k, x), IdempotentOracle(g, k, x)), 1e-12);
  }
  std::vector<double> e_id(g.order(), 0.0);
  e_id[0] = 1;
  EXPECT_LT(Distance(eps.Apply(0, e_id), e_id), 1e-12);
}

TEST(IdempotentTest, ResolutionOfIdentity) {
  const SymmetricGroup g(4);
  const IdempotentAction eps(g);
  const auto x = RandomVector(g.order(), 3);
  const auto parts = eps.ApplyAll(x);
  std::vector<double> sum(g.order(), 0.0);
  for (const auto& p : parts) {
    for (int i = 0; i < g.order(); ++i) sum[i] += p[i];
  }
  EXPECT_LT(Distance(sum, x), 1e-9 * Norm(x));
  for (size_t k = 0; k < parts.size(); ++k) {
    const auto again = eps.ApplyAll(parts[k]);
    for (size_t j = 0; j < parts.size(); ++j) {
      if (j == k) {
        EXPECT_LT(Distance(again[j], parts[k]), 1e-9 * Norm(x));
      } else {
        EXPECT_LT(Norm(again[j]), 1e-9 * Norm(x));
      }
    }
  }
}

TEST(IdempotentTest, CommutesWithOrbitMatrices) {
  const auto index = OrbitIndex::Enumerate(5);
  const SymmetricGroup& g = index->group();
  const IdempotentAction eps(g);
  const auto x = RandomVector(g.order(), 4);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick_l(1, index->num_orbits());
  for (int trial = 0; trial < 6; ++trial) {
    const OrbitId l = pick_l(rng);
    const auto bx = ApplyOrbitMatrix(*index, l, x);
    const auto eps_bx = eps.ApplyAll(bx);
    const auto eps_x = eps.ApplyAll(x);
    for (size_t k = 0; k < eps_x.size(); ++k) {
      const auto b_eps_x = ApplyOrbitMatrix(*index, l, eps_x[k]);
      EXPECT_LT(Distance(eps_bx[k], b_eps_x), 1e-8 * Norm(x)) << l << " " << k;
    }
  }
}

TEST(RestrictionCharacterTest, Examples) {
  const SymmetricGroup g(3);
  const CharacterTable& t = g.table();
  for (int l = 0; l < t.size(); ++l) {
    EXPECT_EQ(RestrictionCharacter(g, l, {0, false}), t.class_size(l));
  }
  for (int beta = 0; beta < g.order(); ++beta) {
    EXPECT_EQ(RestrictionCharacter(g, 0, {beta, true}), 1);
    EXPECT_EQ(RestrictionCharacter(g, 0, {beta, false}), 1);
  }
  const int transpositions = t.ClassIndex(Partition({2, 1}));
  const int swap12 = static_cast<int>(
      Permutation::FromImages(std::vector<int>{2, 1, 3}).Rank());
  EXPECT_EQ(RestrictionCharacter(g, transpositions, {swap12, false}), 1);
}

TEST(RestrictionCharacterTest, InversionTypeMatchesBruteForce) {
  const SymmetricGroup g(4);
  for (int l = 0; l < g.num_classes(); ++l) {
    for (int beta = 0; beta < g.order(); ++beta) {
      const Permutation& b = g.element(beta);
      int64_t count = 0;
      for (int alpha : g.class_members(l)) {
        const Permutation& a = g.element(alpha);
        count += (b.Inverse() * a.Inverse() * b == a);
      }
      EXPECT_EQ(RestrictionCharacter(g, l, {beta, true}), count);
    }
  }
}

TEST(MultiplicityTest, MatchesPublishedTable) {
  for (const auto& row : GetExpectedTables().table3) {
    const SymmetricGroup g(row.n);
    const auto table = Multiplicities(g);
    std::vector<int64_t> expected(row.m.begin(), row.m.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(table.NonzeroMultiplicities(), expected) << row.n;
  }
}

TEST(MultiplicityTest, DimensionIdentities) {
  for (int n = 2; n <= 7; ++n) {
    const SymmetricGroup g(n);
    const auto table = Multiplicities(g);
    int64_t squares = 0, module_dim = 0;
    for (size_t k = 0; k < table.multiplicity.size(); ++k) {
      squares += table.multiplicity[k] * table.multiplicity[k];
      module_dim += table.multiplicity[k] * table.degree[k];
      for (int64_t a : table.coefficient[k]) EXPECT_GE(a, 0);
    }
    EXPECT_EQ(squares, BurnsideCount(g.table())) << n;
    EXPECT_EQ(module_dim, g.order()) << n;
    // Class l contributes the permutation module of dimension |C_l|.
    for (int l = 0; l < g.num_classes(); ++l) {
      int64_t dim = 0;
      for (size_t k = 0; k < table.multiplicity.size(); ++k) {
        dim += table.coefficient[k][l] * table.degree[k];
      }
      EXPECT_EQ(dim, g.table().class_size(l));
    }
  }
}

TEST(OrbitMatrixTest, SumsToAllOnes) {
  const auto index = OrbitIndex::Enumerate(4);
  const SymmetricGroup& g = index->group();
  const auto x = RandomVector(g.order(), 6);
  const double total = std::accumulate(x.begin(), x.end(), 0.0);
  std::vector<double> sum(g.order(), 0.0);
  // Per block (row class i, column class j), the orbit matrices tile C_i x C_j.
  std::vector<std::vector<double>> block(
      g.num_classes() * g.num_classes(), std::vector<double>(g.order(), 0.0));
  for (int l = 1; l <= index->num_orbits(); ++l) {
    const auto y = ApplyOrbitMatrix(*index, l, x);
    const OrbitInfo& info = index->info(l);
    for (int i = 0; i < g.order(); ++i) {
      sum[i] += y[i];
      block[info.row_class * g.num_classes() + info.col_class][i] += y[i];
    }
  }
  for (double v : sum) EXPECT_NEAR(v, total, 1e-9);
  for (int i = 0; i < g.num_classes(); ++i) {
    for (int j = 0; j < g.num_classes(); ++j) {
      double col_sum = 0;
      for (int psi : g.class_members(j)) col_sum += x[psi];
      for (int phi : g.class_members(i)) {
        EXPECT_NEAR(block[i * g.num_classes() + j][phi], col_sum, 1e-9);
      }
    }
  }
}

TEST(TerwilligerTest, DenseDimensionEqualsOrbitCount) {
  for (int n = 3; n <= 5; ++n) {
    const auto index = OrbitIndex::Enumerate(n);
    const auto dense = TerwilligerDimensionDense(index->group());
    EXPECT_EQ(dense.dimension, index->num_orbits()) << n;
    EXPECT_GT(dense.smallest_accepted / std::max(dense.largest_rejected, 1e-300),
              1e4);
  }
}

TEST(TerwilligerTest, OrbitModeAgreesWithDense) {
  for (int n = 3; n <= 4; ++n) {
    const auto index = OrbitIndex::Enumerate(n);
    EXPECT_EQ(TerwilligerDimensionOrbit(*index).dimension,
              TerwilligerDimensionDense(index->group()).dimension);
  }
  EXPECT_EQ(TerwilligerDimensionOrbit(*OrbitIndex::Enumerate(5)).dimension,
            155);
}

TEST(TerwilligerTest, DenseModeRefusesLargeDegree) {
  const SymmetricGroup g(6);
  EXPECT_THROW(TerwilligerDimensionDense(g), CapacityError);
}

}  // namespace
}  // namespace permcode
