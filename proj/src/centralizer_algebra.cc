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

#include "permcode/centralizer_algebra.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "Eigen/Dense"
#include "permcode/errors.h"
#include "permcode/rational.h"

namespace permcode {

std::vector<double> ApplyGroupElement(const SymmetricGroup& group,
                                      GroupElement gamma,
                                      std::span<const double> x) {
  const uint16_t* conj = group.ConjugationRow(gamma.beta);
  std::vector<double> y(x.size());
  for (int phi = 0; phi < group.order(); ++phi) {
    const int src = gamma.invert ? group.inverse_of(phi) : phi;
    y[phi] = x[conj[src]];
  }
  return y;
}

int NumGroupCharacters(const CharacterTable& table) { return 2 * table.size(); }
int GroupCharacterPartition(int k) { return k / 2; }
int GroupCharacterSign(int k) { return (k % 2 == 0) ? 1 : -1; }

int64_t GroupCharacterDegree(const CharacterTable& table, int k) {
  return table.degree(GroupCharacterPartition(k));
}

int64_t GroupCharacterValue(const CharacterTable& table, int k, int cls,
                            bool invert) {
  const int64_t v = table.value(GroupCharacterPartition(k), cls);
  return invert ? GroupCharacterSign(k) * v : v;
}

IdempotentAction::IdempotentAction(const SymmetricGroup& group)
    : group_(group) {}

std::vector<std::vector<double>> IdempotentAction::ClassSums(
    std::span<const double> x) const {
  const int order = group_.order();
  std::vector<double> xinv(order);
  for (int phi = 0; phi < order; ++phi) xinv[phi] = x[group_.inverse_of(phi)];
  std::vector<std::vector<double>> sums(2 * group_.num_classes(),
                                        std::vector<double>(order, 0.0));
  for (int beta = 0; beta < order; ++beta) {
    const uint16_t* conj = group_.ConjugationRow(beta);
    const int c = group_.class_of(beta);
    double* plain = sums[2 * c].data();
    double* inverted = sums[2 * c + 1].data();
    for (int phi = 0; phi < order; ++phi) {
      plain[phi] += x[conj[phi]];
      inverted[phi] += xinv[conj[phi]];
    }
  }
  return sums;
}

std::vector<double> IdempotentAction::Combine(
    int k, const std::vector<std::vector<double>>& sums) const {
  const CharacterTable& t = group_.table();
  const int order = group_.order();
  const double scale = static_cast<double>(GroupCharacterDegree(t, k)) /
                       (2.0 * static_cast<double>(order));
  std::vector<double> y(order, 0.0);
  for (int c = 0; c < t.size(); ++c) {
    for (int inv = 0; inv < 2; ++inv) {
      const double w = scale * GroupCharacterValue(t, k, c, inv == 1);
      if (w == 0) continue;
      const std::vector<double>& s = sums[2 * c + inv];
      for (int phi = 0; phi < order; ++phi) y[phi] += w * s[phi];
    }
  }
  return y;
}

std::vector<double> IdempotentAction::Apply(int k,
                                            std::span<const double> x) const {
  return Combine(k, ClassSums(x));
}

std::vector<std::vector<double>> IdempotentAction::ApplyAll(
    std::span<const double> x) const {
  const auto sums = ClassSums(x);
  std::vector<std::vector<double>> out;
  for (int k = 0; k < NumGroupCharacters(group_.table()); ++k) {
    out.push_back(Combine(k, sums));
  }
  return out;
}

int64_t RestrictionCharacter(const SymmetricGroup& group, int cls,
                             GroupElement gamma) {
  const uint16_t* conj = group.ConjugationRow(gamma.beta);
  int64_t count = 0;
  for (int alpha : group.class_members(cls)) {
    const int src = gamma.invert ? group.inverse_of(alpha) : alpha;
    count += (conj[src] == alpha);
  }
  return count;
}

std::vector<int64_t> MultiplicityTable::NonzeroMultiplicities() const {
  std::vector<int64_t> out;
  for (int64_t m : multiplicity) {
    if (m != 0) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MultiplicityTable Multiplicities(const SymmetricGroup& group) {
  const CharacterTable& t = group.table();
  const int classes = t.size();
  // fix[(c, inv)][l] for the first member of each class c.
  std::vector<std::vector<int64_t>> fix(2 * classes,
                                        std::vector<int64_t>(classes));
  for (int c = 0; c < classes; ++c) {
    const int rep = group.class_members(c).front();
    for (int inv = 0; inv < 2; ++inv) {
      for (int l = 0; l < classes; ++l) {
        fix[2 * c + inv][l] = RestrictionCharacter(group, l, {rep, inv == 1});
      }
    }
  }
  MultiplicityTable out;
  const int64_t denom = 2 * static_cast<int64_t>(group.order());
  for (int k = 0; k < NumGroupCharacters(t); ++k) {
    out.degree.push_back(GroupCharacterDegree(t, k));
    std::vector<int64_t> a(classes);
    int64_t total = 0;
    for (int l = 0; l < classes; ++l) {
      BigInt sum = 0;
      for (int c = 0; c < classes; ++c) {
        for (int inv = 0; inv < 2; ++inv) {
          sum += BigInt(t.class_size(c)) * fix[2 * c + inv][l] *
                 GroupCharacterValue(t, k, c, inv == 1);
        }
      }
      a[l] = ExactDivide(sum, denom, "multiplicity coefficient")
                 .convert_to<int64_t>();
      if (a[l] < 0) {
        throw ConsistencyError("negative multiplicity coefficient for k = " +
                               std::to_string(k));
      }
      total += a[l];
    }
    out.multiplicity.push_back(total);
    out.coefficient.push_back(std::move(a));
  }
  return out;
}

std::vector<double> ApplyOrbitMatrix(const OrbitIndex& index, OrbitId l,
                                     std::span<const double> x) {
  const int order = index.group().order();
  const OrbitId* ids = index.ids().data();
  std::vector<double> y(order, 0.0);
  for (int phi = 0; phi < order; ++phi) {
    const OrbitId* row = ids + static_cast<size_t>(phi) * order;
    double s = 0;
    for (int psi = 0; psi < order; ++psi) {
      if (row[psi] == l) s += x[psi];
    }
    y[phi] = s;
  }
  return y;
}

namespace {

constexpr double kRankThreshold = 1e-8;

// Incremental orthonormal basis with two-pass modified Gram-Schmidt. A
// residual counts as new when it exceeds kRankThreshold times the largest
// candidate norm seen so far; products that vanish exactly come out as
// rounding noise and must not be judged against their own norm.
class SpanBuilder {
 public:
  bool Add(Eigen::VectorXd v) {
    scale_ = std::max(scale_, v.norm());
    if (scale_ == 0) return false;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis_) v -= b.dot(v) * b;
    }
    const double rel = v.norm() / scale_;
    if (rel <= kRankThreshold) {
      largest_rejected_ = std::max(largest_rejected_, rel);
      return false;
    }
    smallest_accepted_ = std::min(smallest_accepted_, rel);
    basis_.push_back(v / v.norm());
    return true;
  }
  int size() const { return static_cast<int>(basis_.size()); }
  const Eigen::VectorXd& at(int i) const { return basis_[i]; }

  TerwilligerResult Result() const {
    return {size(), smallest_accepted_, largest_rejected_};
  }

 private:
  std::vector<Eigen::VectorXd> basis_;
  double smallest_accepted_ = std::numeric_limits<double>::infinity();
  double largest_rejected_ = 0;
  double scale_ = 0;
};

// Closes span(generators) under left multiplication. `multiply(g, v)` returns
// generator g times the element with coordinates v.
template <typename Multiply>
TerwilligerResult Close(int num_generators,
                        const std::vector<Eigen::VectorXd>& generators,
                        Multiply multiply) {
  SpanBuilder span;
  for (const auto& g : generators) span.Add(g);
  for (int q = 0; q < span.size(); ++q) {
    const Eigen::VectorXd current = span.at(q);
    for (int g = 0; g < num_generators; ++g) span.Add(multiply(g, current));
  }
  return span.Result();
}

}  // namespace

TerwilligerResult TerwilligerDimensionDense(const SymmetricGroup& group) {
  if (group.n() > 5) {
    throw CapacityError(
        "dense Terwilliger closure is limited to n <= 5; use the orbit mode");
  }
  const int order = group.order();
  const int classes = group.num_classes();
  std::vector<int> product(static_cast<size_t>(order) * order);
  for (int c = 0; c < order; ++c) {
    for (int phi = 0; phi < order; ++phi) {
      product[c * order + phi] = group.Multiply(c, phi);
    }
  }
  // Column-major vectorization: entry (phi, psi) at phi + psi * order.
  // Generators 0..classes-1 are A_i, then E'_i.
  std::vector<Eigen::VectorXd> gens;
  for (int i = 0; i < classes; ++i) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(order * order);
    for (int phi = 0; phi < order; ++phi) {
      for (int psi = 0; psi < order; ++psi) {
        if (group.class_of(group.Quotient(phi, psi)) == i) {
          a[phi + psi * order] = 1;
        }
      }
    }
    gens.push_back(std::move(a));
  }
  for (int i = 0; i < classes; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(order * order);
    for (int phi : group.class_members(i)) e[phi + phi * order] = 1;
    gens.push_back(std::move(e));
  }
  auto multiply = [&](int g, const Eigen::VectorXd& x) {
    Eigen::VectorXd y = Eigen::VectorXd::Zero(order * order);
    if (g < classes) {
      // (A_i X)(phi, psi) = sum_{c in C_i} X(c phi, psi).
      for (int c : group.class_members(g)) {
        for (int phi = 0; phi < order; ++phi) {
          const int src = product[c * order + phi];
          for (int psi = 0; psi < order; ++psi) {
            y[phi + psi * order] += x[src + psi * order];
          }
        }
      }
    } else {
      for (int phi : group.class_members(g - classes)) {
        for (int psi = 0; psi < order; ++psi) {
          y[phi + psi * order] = x[phi + psi * order];
        }
      }
    }
    return y;
  };
  return Close(2 * classes, gens, multiply);
}

TerwilligerResult TerwilligerDimensionOrbit(const OrbitIndex& index) {
  const SymmetricGroup& group = index.group();
  if (group.n() > 6) {
    throw CapacityError("orbit-mode Terwilliger closure is limited to n <= 6");
  }
  const int order = group.order();
  const int classes = group.num_classes();
  const int m = index.num_orbits();
  // Coordinates x_l * sqrt|O_l| so that the Euclidean inner product is the
  // Frobenius inner product of the underlying matrices.
  std::vector<double> scale(m);
  for (int l = 1; l <= m; ++l) scale[l - 1] = std::sqrt(index.info(l).size);
  // neighbor[l][c] = orbit of (c phi_l, psi_l).
  std::vector<OrbitId> neighbor(static_cast<size_t>(m) * order);
  for (int l = 1; l <= m; ++l) {
    const OrbitInfo& info = index.info(l);
    for (int c = 0; c < order; ++c) {
      neighbor[static_cast<size_t>(l - 1) * order + c] =
          index.orbit_of(group.Multiply(c, info.rep_phi), info.rep_psi);
    }
  }
  std::vector<Eigen::VectorXd> gens;
  for (int i = 0; i < classes; ++i) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(m);
    for (int l = 1; l <= m; ++l) {
      if (index.info(l).quotient_class == i) a[l - 1] = scale[l - 1];
    }
    gens.push_back(std::move(a));
  }
  for (int i = 0; i < classes; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(m);
    e[index.diagonal_orbit(i) - 1] = scale[index.diagonal_orbit(i) - 1];
    gens.push_back(std::move(e));
  }
  auto multiply = [&](int g, const Eigen::VectorXd& x) {
    Eigen::VectorXd y = Eigen::VectorXd::Zero(m);
    if (g < classes) {
      for (int l = 0; l < m; ++l) {
        const OrbitId* row = neighbor.data() + static_cast<size_t>(l) * order;
        double s = 0;
        for (int c : group.class_members(g)) {
          s += x[row[c] - 1] / scale[row[c] - 1];
        }
        y[l] = s * scale[l];
      }
    } else {
      for (int l = 1; l <= m; ++l) {
        if (index.info(l).row_class == g - classes) y[l - 1] = x[l - 1];
      }
    }
    return y;
  };
  return Close(2 * classes, gens, multiply);
}

}  // namespace permcode
