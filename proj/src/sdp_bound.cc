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

#include "permcode/sdp_bound.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <stdexcept>

#include "permcode/delsarte_lp.h"
#include "permcode/errors.h"
#include "permcode/partition.h"
#include "permcode/sdpa_format.h"

namespace permcode {

Eigen::MatrixXd RationalMatrix::ToDouble() const {
  Eigen::MatrixXd m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) m(i, j) = permcode::ToDouble((*this)(i, j));
  }
  return m;
}

namespace {

constexpr int kMaxDenseDegree = 5;
constexpr double kBoundSlack = 1e-5;
constexpr double kConstantBlockTolerance = 1e-9;

std::vector<int> ValidateCode(const SymmetricGroup& group,
                              std::span<const int> code) {
  if (code.empty()) throw std::invalid_argument("code is empty");
  std::vector<int> sorted(code.begin(), code.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0 || sorted.back() >= group.order()) {
    throw std::invalid_argument("code contains an out-of-range rank");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("code contains a repeated permutation");
  }
  return sorted;
}

// counts(phi, psi) = number of isometries t with t(delta) = id for some
// delta in `pivots` and phi, psi in t(code).
std::vector<int64_t> CountPairs(const SymmetricGroup& group,
                                const std::vector<int>& code,
                                const std::vector<int>& pivots) {
  const int order = group.order();
  std::vector<int64_t> counts(static_cast<size_t>(order) * order, 0);
  std::vector<int> moved(code.size()), image(code.size());
  for (int delta : pivots) {
    for (size_t g = 0; g < code.size(); ++g) {
      moved[g] = group.Quotient(code[g], delta);
    }
    for (int beta = 0; beta < order; ++beta) {
      const uint16_t* conj = group.ConjugationRow(beta);
      for (int inv = 0; inv < 2; ++inv) {
        for (size_t g = 0; g < code.size(); ++g) {
          image[g] = conj[inv ? group.inverse_of(moved[g]) : moved[g]];
        }
        for (int a : image) {
          int64_t* row = &counts[static_cast<size_t>(a) * order];
          for (int b : image) ++row[b];
        }
      }
    }
  }
  return counts;
}

RationalMatrix Normalize(const std::vector<int64_t>& counts, int order,
                         int64_t total) {
  RationalMatrix m(order);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      m(i, j) = Rational(counts[static_cast<size_t>(i) * order + j], total);
    }
  }
  return m;
}

void CheckDenseDegree(int n) {
  if (n > kMaxDenseDegree) {
    throw std::invalid_argument("dense witness matrices need n <= 5");
  }
}

std::vector<bool> AllowedClasses(const CharacterTable& table,
                                 std::span<const int> distances) {
  std::vector<bool> allowed(table.size(), false);
  allowed[0] = true;
  for (int c = 1; c < table.size(); ++c) {
    const int w = HammingWeight(table.classes()[c]);
    allowed[c] = std::find(distances.begin(), distances.end(), w) !=
                 distances.end();
  }
  return allowed;
}

// Per orbit o: the (variable, coefficient) pairs through which B_o enters
// R_1 and R_2.
struct OrbitUsage {
  std::vector<std::vector<std::pair<int, double>>> r1, r2;
};

// Builds variables, forced zeros, the objective and the box block.
struct Skeleton {
  SdpProblem problem;
  OrbitUsage usage;
  std::vector<bool> allowed;
};

Skeleton BuildSkeleton(const OrbitIndex& index, std::span<const int> distances,
                       const SdpAssembleOptions& options) {
  const CharacterTable& table = index.group().table();
  Skeleton s;
  SdpProblem& p = s.problem;
  p.n = index.n();
  p.distances = ValidateDistances(p.n, distances);
  s.allowed = AllowedClasses(table, p.distances);
  const BPrimeSet bprime = BuildBPrime(index, options.rule);

  for (int j = 1; j < table.size(); ++j) {
    const std::vector<OrbitId> tied = {index.left_identity_orbit(j),
                                       index.right_identity_orbit(j),
                                       index.diagonal_orbit(j)};
    if (s.allowed[j] && options.tie_identity_orbits) {
      p.variables.push_back({tied, 1.0, table.class_size(j)});
    } else if (s.allowed[j]) {
      p.variables.push_back({{tied[0], tied[1]}, 1.0, 0});
      p.variables.push_back({{tied[2]}, 1.0, table.class_size(j)});
    } else {
      p.forced_zero.insert(p.forced_zero.end(), tied.begin(), tied.end());
    }
  }
  for (OrbitId l = 2; l <= static_cast<OrbitId>(index.num_orbits()); ++l) {
    if (bprime.in_i1[l - 1]) continue;
    const OrbitInfo& info = index.info(l);
    if (!s.allowed[info.row_class] || !s.allowed[info.col_class] ||
        !s.allowed[info.quotient_class]) {
      p.forced_zero.push_back(l);
      continue;
    }
    if (info.transpose < l) continue;
    if (info.transpose == l) {
      p.variables.push_back({{l}, 1.0, 0});
    } else if (options.split_transpose) {
      p.variables.push_back({{l, info.transpose}, 0.5, 0});
      p.variables.push_back({{l, info.transpose}, 0.5, 0});
    } else {
      p.variables.push_back({{l, info.transpose}, 1.0, 0});
    }
  }
  std::sort(p.forced_zero.begin(), p.forced_zero.end());

  const int nv = static_cast<int>(p.variables.size());
  s.usage.r1.resize(index.num_orbits() + 1);
  s.usage.r2.resize(index.num_orbits() + 1);
  for (int v = 0; v < nv; ++v) {
    const SdpVariable& var = p.variables[v];
    for (OrbitId l : var.orbits) {
      s.usage.r1[l].push_back({v, var.weight});
      for (const auto& [o, c] : bprime.terms[l - 1]) {
        s.usage.r2[o].push_back({v, var.weight * c});
      }
    }
  }

  SdpInstance& inst = p.instance;
  inst.num_vars = nv;
  inst.objective.resize(nv);
  for (int v = 0; v < nv; ++v) {
    inst.objective[v] = static_cast<double>(p.variables[v].trace);
  }
  inst.objective_offset = 1;
  if (nv > 0) {
    DiagonalSdpBlock box;
    box.label = "box";
    box.dim = 2 * nv;
    box.constant = Eigen::VectorXd::Zero(2 * nv);
    for (int v = 0; v < nv; ++v) {
      box.constant[2 * v + 1] = 1;
      box.entries.push_back({v, 2 * v, 1});
      box.entries.push_back({v, 2 * v + 1, -1});
    }
    inst.diagonal.push_back(std::move(box));
  }
  return s;
}

// Adds an affine block, or checks and drops it when no variable enters.
void AddBlock(SdpProblem& p, std::string label, Eigen::MatrixXd constant,
              std::vector<Eigen::MatrixXd> coef) {
  const int dim = static_cast<int>(constant.rows());
  if (dim == 0) return;
  DenseSdpBlock block;
  block.label = std::move(label);
  block.dim = dim;
  block.constant = std::move(constant);
  block.coef.resize(static_cast<Eigen::Index>(dim) * dim, 0);
  for (size_t v = 0; v < coef.size(); ++v) {
    if (coef[v].size() > 0 && coef[v].cwiseAbs().maxCoeff() > 0) {
      SdpInstance::AppendCoefficient(block, static_cast<int>(v), coef[v]);
    }
  }
  if (block.vars.empty()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block.constant,
                                                      Eigen::EigenvaluesOnly);
    if (es.eigenvalues()[0] < -kConstantBlockTolerance) {
      throw ConsistencyError("constant SDP block " + block.label +
                             " is not positive semidefinite");
    }
    ++p.dropped_blocks;
    return;
  }
  p.instance.dense.push_back(std::move(block));
}

}  // namespace

CodeWitness WitnessMatrices(const SymmetricGroup& group,
                            std::span<const int> code, bool with_prime) {
  CheckDenseDegree(group.n());
  CodeWitness w;
  w.code = ValidateCode(group, code);
  const int order = group.order();
  const int64_t size = static_cast<int64_t>(w.code.size());
  if (with_prime && size == order) {
    throw std::invalid_argument(
        "R' is undefined for the whole group: every isometry maps a codeword "
        "to id");
  }
  w.r = Normalize(CountPairs(group, w.code, w.code), order, 2 * order * size);
  if (with_prime) {
    std::vector<int> outside;
    for (int g = 0, c = 0; g < order; ++g) {
      if (c < size && w.code[c] == g) {
        ++c;
      } else {
        outside.push_back(g);
      }
    }
    w.r_prime = Normalize(CountPairs(group, w.code, outside), order,
                          2 * order * (order - size));
  }
  return w;
}

std::vector<Rational> CoefficientsFromCode(const OrbitIndex& index,
                                           std::span<const int> code) {
  const SymmetricGroup& group = index.group();
  const std::vector<int> c = ValidateCode(group, code);
  std::vector<int64_t> counts(index.num_orbits(), 0);
  for (int theta : c) {
    const int inv = group.inverse_of(theta);
    for (int mu : c) {
      const int a = group.Multiply(inv, mu);
      for (int nu : c) {
        ++counts[index.orbit_of(a, group.Multiply(inv, nu)) - 1];
      }
    }
  }
  std::vector<Rational> out(index.num_orbits());
  const int64_t size = static_cast<int64_t>(c.size());
  for (int l = 0; l < index.num_orbits(); ++l) {
    out[l] = Rational(counts[l], size * index.info(l + 1).size);
  }
  return out;
}

BPrimeSet BuildBPrime(const OrbitIndex& index, BPrimeRule rule) {
  const int num_orbits = index.num_orbits();
  const int num_classes = index.group().num_classes();
  BPrimeSet b;
  b.in_i1.assign(num_orbits, false);
  b.terms.resize(num_orbits);
  std::vector<std::vector<OrbitId>> by_quotient(num_classes);
  for (OrbitId l = 2; l <= static_cast<OrbitId>(num_orbits); ++l) {
    by_quotient[index.info(l).quotient_class].push_back(l);
  }
  for (int j = 1; j < num_classes; ++j) {
    const OrbitId x = index.left_identity_orbit(j);
    const OrbitId y = index.right_identity_orbit(j);
    const OrbitId z = index.diagonal_orbit(j);
    b.in_i1[x - 1] = b.in_i1[y - 1] = b.in_i1[z - 1] = true;
    auto& terms = b.terms[y - 1];
    for (OrbitId o : by_quotient[j]) {
      if (rule == BPrimeRule::kCorrected && (o == x || o == y)) continue;
      terms.push_back({o, 1});
    }
    terms.push_back({z, -1});
  }
  for (OrbitId l = 2; l <= static_cast<OrbitId>(num_orbits); ++l) {
    if (!b.in_i1[l - 1]) b.terms[l - 1] = {{l, -1}};
  }
  return b;
}

RationalMatrix ExpandR(const OrbitIndex& index, std::span<const Rational> a) {
  CheckDenseDegree(index.n());
  const int order = index.group().order();
  RationalMatrix m(order);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) m(i, j) = a[index.orbit_of(i, j) - 1];
  }
  return m;
}

RationalMatrix ExpandRPrime(const OrbitIndex& index, const BPrimeSet& bprime,
                            std::span<const Rational> a) {
  CheckDenseDegree(index.n());
  const int order = index.group().order();
  std::vector<Rational> per_orbit(index.num_orbits() + 1);
  for (int l = 2; l <= index.num_orbits(); ++l) {
    if (a[l - 1] == 0) continue;
    for (const auto& [o, c] : bprime.terms[l - 1]) per_orbit[o] += a[l - 1] * c;
  }
  RationalMatrix m(order);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      m(i, j) = per_orbit[index.orbit_of(i, j)];
    }
    if (i != 0) m(i, i) += 1;
  }
  return m;
}

const char* ToString(SdpMode mode) {
  return mode == SdpMode::kFull ? "full" : "block";
}

SdpProblem AssembleSdp(const OrbitIndex& index, std::span<const int> distances,
                       const SdpAssembleOptions& options) {
  const int n = index.n();
  if (n > kMaxDenseDegree + (options.allow_slow ? 1 : 0)) {
    throw CapacityError("full-mode SDP at n = " + std::to_string(n) +
                        " is not supported" +
                        (n == kMaxDenseDegree + 1 ? " without allow_slow" : ""));
  }
  Skeleton s = BuildSkeleton(index, distances, options);
  SdpProblem& p = s.problem;
  p.mode = SdpMode::kFull;
  const SymmetricGroup& group = index.group();
  const int order = group.order();
  const int nv = p.instance.num_vars;

  std::vector<int> pos1(order, -1), pos2(order, -1);
  int d1 = 0, d2 = 0;
  for (int g = 0; g < order; ++g) {
    if (s.allowed[group.class_of(g)]) pos1[g] = d1++;
    if (g != 0) pos2[g] = d2++;
  }
  Eigen::MatrixXd c1 = Eigen::MatrixXd::Zero(d1, d1);
  c1(pos1[0], pos1[0]) = 1;
  Eigen::MatrixXd c2 = Eigen::MatrixXd::Identity(d2, d2);
  std::vector<Eigen::MatrixXd> a1(nv, Eigen::MatrixXd::Zero(d1, d1));
  std::vector<Eigen::MatrixXd> a2(nv, Eigen::MatrixXd::Zero(d2, d2));
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      const OrbitId o = index.orbit_of(i, j);
      if (pos1[i] >= 0 && pos1[j] >= 0) {
        for (const auto& [v, c] : s.usage.r1[o]) a1[v](pos1[i], pos1[j]) += c;
      }
      if (pos2[i] >= 0 && pos2[j] >= 0) {
        for (const auto& [v, c] : s.usage.r2[o]) a2[v](pos2[i], pos2[j]) += c;
      }
    }
  }
  AddBlock(p, "R1", std::move(c1), std::move(a1));
  AddBlock(p, "R2", std::move(c2), std::move(a2));
  return p;
}

SdpProblem AssembleSdp(const BasicBlockSet& blocks,
                       std::span<const int> distances,
                       const SdpAssembleOptions& options) {
  const OrbitIndex& index = blocks.index();
  Skeleton s = BuildSkeleton(index, distances, options);
  SdpProblem& p = s.problem;
  p.mode = SdpMode::kBlock;
  const int nv = p.instance.num_vars;
  const int num_classes = index.group().num_classes();

  for (int b = 0; b < blocks.num_blocks(); ++b) {
    const BasicBlockSet::Block& blk = blocks.block(b);
    std::vector<int> keep1, keep2;
    for (int c = 0; c < num_classes; ++c) {
      for (int t = 0; t < blk.class_dim[c]; ++t) {
        if (s.allowed[c]) keep1.push_back(blk.class_offset[c] + t);
        if (c != 0) keep2.push_back(blk.class_offset[c] + t);
      }
    }
    const int d1 = static_cast<int>(keep1.size());
    const int d2 = static_cast<int>(keep2.size());
    std::vector<Eigen::MatrixXd> a1(nv), a2(nv);
    for (int v = 0; v < nv; ++v) {
      a1[v] = Eigen::MatrixXd::Zero(blk.m, blk.m);
      a2[v] = Eigen::MatrixXd::Zero(blk.m, blk.m);
    }
    for (OrbitId o = 2; o <= static_cast<OrbitId>(index.num_orbits()); ++o) {
      if (s.usage.r1[o].empty() && s.usage.r2[o].empty()) continue;
      const Eigen::MatrixXd img = blocks.Image(b, o);
      for (const auto& [v, c] : s.usage.r1[o]) a1[v] += c * img;
      for (const auto& [v, c] : s.usage.r2[o]) a2[v] += c * img;
    }
    const Eigen::MatrixXd b1 = blocks.Image(b, 1);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(blk.m, blk.m);
    const Eigen::MatrixXd c2full = id - b1;
    const std::string suffix = " k=" + std::to_string(blk.k);
    // Restriction to kept basis indices.
    auto restrict = [](const Eigen::MatrixXd& m, const std::vector<int>& keep) {
      const int d = static_cast<int>(keep.size());
      Eigen::MatrixXd r(d, d);
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) r(i, j) = m(keep[i], keep[j]);
      }
      return r;
    };
    std::vector<Eigen::MatrixXd> r1(nv), r2(nv);
    for (int v = 0; v < nv; ++v) {
      r1[v] = restrict(a1[v], keep1);
      r2[v] = restrict(a2[v], keep2);
    }
    if (d1 > 0) AddBlock(p, "R1" + suffix, restrict(b1, keep1), std::move(r1));
    if (d2 > 0) {
      AddBlock(p, "R2" + suffix, restrict(c2full, keep2), std::move(r2));
    }
  }
  return p;
}

SdpBoundResult SolveSdpBound(const SdpProblem& problem,
                             const SdpOptions& options) {
  SdpBoundResult r;
  const SdpInstance& inst = problem.instance;
  r.num_variables = inst.num_vars;
  SdpSolution sol;
  if (inst.num_vars == 0 && inst.dense.empty()) {
    sol.status = SdpStatus::kOptimal;
    sol.primal_objective = sol.dual_objective = inst.objective_offset;
    sol.y = Eigen::VectorXd(0);
  } else {
    sol = SolveSdp(inst, options);
  }
  r.status = sol.status;
  r.raw_optimum = sol.primal_objective;
  r.dual_objective = sol.dual_objective;
  r.floored_bound =
      static_cast<int64_t>(std::floor(sol.primal_objective + kBoundSlack));
  r.relative_gap = sol.relative_gap;
  r.primal_infeasibility = sol.primal_infeasibility;
  r.dual_infeasibility = sol.dual_infeasibility;
  r.iterations = sol.iterations;
  r.message = sol.message;
  r.y = sol.y;
  size_t e = 0;
  for (const auto& b : inst.dense) {
    r.min_eigenvalues.push_back({b.label, sol.min_eigenvalues[e++]});
  }
  for (const auto& b : inst.diagonal) {
    r.min_eigenvalues.push_back({b.label, sol.min_eigenvalues[e++]});
  }
  return r;
}

void ExportSdpa(const SdpProblem& problem, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "* permcode SDP n=" << problem.n << " D={";
  for (size_t i = 0; i < problem.distances.size(); ++i) {
    out << (i ? "," : "") << problem.distances[i];
  }
  out << "} mode=" << ToString(problem.mode) << '\n';
  WriteSdpa(problem.instance, out);
  if (!out) throw std::runtime_error("error writing " + path);
}

Eigen::VectorXd VariableValues(const SdpProblem& problem,
                               std::span<const Rational> a) {
  for (OrbitId l : problem.forced_zero) {
    if (a[l - 1] != 0) {
      throw std::invalid_argument("orbit " + std::to_string(l) +
                                  " is forced to zero but has coefficient " +
                                  ToString(a[l - 1]));
    }
  }
  Eigen::VectorXd y(problem.variables.size());
  for (size_t v = 0; v < problem.variables.size(); ++v) {
    const auto& orbits = problem.variables[v].orbits;
    const Rational& value = a[orbits[0] - 1];
    for (OrbitId l : orbits) {
      if (a[l - 1] != value) {
        throw std::invalid_argument("orbits " + std::to_string(orbits[0]) +
                                    " and " + std::to_string(l) +
                                    " share a variable but differ");
      }
    }
    y[v] = ToDouble(value);
  }
  return y;
}

bool SdpPoint::Feasible(double tolerance) const {
  return std::all_of(min_eigenvalues.begin(), min_eigenvalues.end(),
                     [&](double e) { return e >= -tolerance; });
}

SdpPoint EvaluateSdp(const SdpProblem& problem, const Eigen::VectorXd& y) {
  const SdpInstance& inst = problem.instance;
  SdpPoint pt;
  pt.objective = inst.objective_offset + inst.objective.dot(y);
  for (const auto& b : inst.dense) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b.Evaluate(y),
                                                      Eigen::EigenvaluesOnly);
    pt.min_eigenvalues.push_back(es.eigenvalues()[0]);
  }
  for (const auto& b : inst.diagonal) {
    const Eigen::VectorXd v = b.Evaluate(y);
    pt.min_eigenvalues.push_back(v.size() ? v.minCoeff()
                                          : std::numeric_limits<double>::infinity());
  }
  return pt;
}

}  // namespace permcode
