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

#include "permcode/block_diag.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>

#include "permcode/errors.h"

namespace permcode {

namespace {

constexpr double kSeedAcceptance = 1e-6;
constexpr double kRankThreshold = 1e-8;
constexpr int kPointProbes = 16;
constexpr int kDenseProbes = 4;

double Norm(std::span<const double> x) {
  double s = 0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

Partition RemoveLastBox(const Partition& shape) {
  std::vector<int> parts = shape.parts();
  if (--parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

// Cycle type of a permutation fixing the last n - j points, as a partition
// of j.
Partition RestrictedCycleType(const Permutation& p, int j) {
  std::vector<int> parts = p.CycleType().parts();
  int drop = p.degree() - j;
  while (drop-- > 0) parts.pop_back();
  return Partition(std::move(parts));
}

}  // namespace

ChainProjector::ChainProjector(const SymmetricGroup& group,
                               const Partition& shape)
    : group_(group) {
  const int n = group.n();
  Partition current = shape;
  for (int j = n - 1; j >= 2; --j) {
    current = RemoveLastBox(current);
    Stage stage;
    const double scale = static_cast<double>(Character(current, Partition(
                             std::vector<int>(j, 1)))) /
                         static_cast<double>(Factorial(j));
    for (int beta = 0; beta < group.order(); ++beta) {
      const Permutation& p = group.element(beta);
      bool fixes_tail = true;
      for (int x = j; x < n; ++x) fixes_tail &= (p(x) == x);
      if (!fixes_tail) continue;
      const double chi =
          static_cast<double>(Character(current, RestrictedCycleType(p, j)));
      if (chi == 0) continue;
      stage.elements.push_back(beta);
      stage.weights.push_back(scale * chi);
    }
    stages_.push_back(std::move(stage));
  }
}

std::vector<double> ChainProjector::Apply(std::span<const double> x) const {
  std::vector<double> cur(x.begin(), x.end());
  std::vector<double> next(cur.size());
  for (const Stage& stage : stages_) {
    std::fill(next.begin(), next.end(), 0.0);
    for (size_t e = 0; e < stage.elements.size(); ++e) {
      const uint16_t* conj = group_.ConjugationRow(stage.elements[e]);
      const double w = stage.weights[e];
      for (size_t phi = 0; phi < cur.size(); ++phi) {
        next[phi] += w * cur[conj[phi]];
      }
    }
    cur.swap(next);
  }
  return cur;
}

std::vector<double> SeedVector(const SymmetricGroup& group,
                               const IdempotentAction& eps,
                               const MultiplicityTable& mult, int k,
                               uint64_t seed) {
  if (mult.multiplicity.at(k) == 0) {
    throw std::invalid_argument("seed vector requested for a block with m_k = 0");
  }
  const ChainProjector chain(
      group, group.table().characters()[GroupCharacterPartition(k)]);
  const int order = group.order();
  std::mt19937_64 rng(seed + static_cast<uint64_t>(k));
  auto attempt = [&](const std::vector<double>& probe,
                     std::vector<double>* out) {
    std::vector<double> v = eps.Apply(k, chain.Apply(probe));
    const double norm = Norm(v);
    if (norm < kSeedAcceptance * Norm(probe)) return false;
    for (double& x : v) x /= norm;
    *out = std::move(v);
    return true;
  };
  std::vector<double> v;
  std::vector<double> probe(order, 0.0);
  probe[0] = 1;
  if (attempt(probe, &v)) return v;
  std::uniform_int_distribution<int> pick(0, order - 1);
  for (int t = 0; t < kPointProbes; ++t) {
    std::fill(probe.begin(), probe.end(), 0.0);
    probe[pick(rng)] = 1;
    if (attempt(probe, &v)) return v;
  }
  std::normal_distribution<double> normal;
  for (int t = 0; t < kDenseProbes; ++t) {
    for (double& x : probe) x = normal(rng);
    if (attempt(probe, &v)) return v;
  }
  throw ConsistencyError("no nonzero seed vector found for block k = " +
                         std::to_string(k));
}

BlockBasis ComputeBlockBasis(const OrbitIndex& index,
                             const MultiplicityTable& mult, int k,
                             std::span<const double> seed) {
  const SymmetricGroup& group = index.group();
  const int order = group.order();
  const int classes = group.num_classes();
  const int num_orbits = index.num_orbits();
  BlockBasis basis;
  basis.k = k;
  basis.m = static_cast<int>(mult.multiplicity.at(k));
  basis.degree = mult.degree.at(k);
  basis.class_offset.assign(classes + 1, 0);
  for (int i = 0; i < classes; ++i) {
    basis.class_dim.push_back(static_cast<int>(mult.coefficient[k][i]));
    basis.class_offset[i + 1] = basis.class_offset[i] + basis.class_dim[i];
  }
  const OrbitId* ids = index.ids().data();
  std::vector<int> local(num_orbits + 1, -1);
  for (int i = 0; i < classes; ++i) {
    const int want = basis.class_dim[i];
    if (want == 0) continue;
    const std::vector<int>& members = group.class_members(i);
    const int size = static_cast<int>(members.size());
    // Candidates E'_i B_l v, one per orbit with row class i.
    int count = 0;
    for (int l = 1; l <= num_orbits; ++l) {
      local[l] = index.info(l).row_class == i ? count++ : -1;
    }
    std::vector<double> cand(static_cast<size_t>(count) * size, 0.0);
    for (int p = 0; p < size; ++p) {
      const OrbitId* row = ids + static_cast<size_t>(members[p]) * order;
      for (int psi = 0; psi < order; ++psi) {
        cand[static_cast<size_t>(local[row[psi]]) * size + p] += seed[psi];
      }
    }
    double scale = 0;
    for (int c = 0; c < count; ++c) {
      scale = std::max(scale, Norm({cand.data() + static_cast<size_t>(c) * size,
                                    static_cast<size_t>(size)}));
    }
    std::vector<Eigen::VectorXd> found;
    for (int c = 0; c < count && scale > 0; ++c) {
      Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(
          cand.data() + static_cast<size_t>(c) * size, size);
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : found) w -= b.dot(w) * b;
      }
      const double rel = w.norm() / scale;
      if (rel <= kRankThreshold) continue;
      found.push_back(w / w.norm());
      basis.accepted_norms.push_back(rel);
    }
    if (static_cast<int>(found.size()) != want) {
      throw ConsistencyError(
          "block k = " + std::to_string(k) + ", class " + std::to_string(i) +
          ": found dimension " + std::to_string(found.size()) +
          ", expected " + std::to_string(want));
    }
    for (const auto& f : found) {
      std::vector<double> u(order, 0.0);
      for (int p = 0; p < size; ++p) u[members[p]] = f[p];
      basis.vectors.push_back(std::move(u));
    }
  }
  return basis;
}

void BasicBlockSet::Allocate() {
  const int num_orbits = index_->num_orbits();
  offset_.assign(blocks_.size(), {});
  data_.assign(blocks_.size(), {});
  for (size_t b = 0; b < blocks_.size(); ++b) {
    size_t total = 0;
    for (int l = 1; l <= num_orbits; ++l) {
      const OrbitInfo& info = index_->info(l);
      offset_[b].push_back(total);
      total += static_cast<size_t>(blocks_[b].class_dim[info.row_class]) *
               blocks_[b].class_dim[info.col_class];
    }
    offset_[b].push_back(total);
    data_[b].assign(total, 0.0);
  }
}

BasicBlockSet BasicBlockSet::Compute(std::shared_ptr<const OrbitIndex> index,
                                     uint64_t seed) {
  const SymmetricGroup& group = index->group();
  const MultiplicityTable mult = Multiplicities(group);
  const IdempotentAction eps(group);
  std::vector<BlockBasis> bases;
  for (int k = 0; k < NumGroupCharacters(group.table()); ++k) {
    if (mult.multiplicity[k] == 0) continue;
    const std::vector<double> v = SeedVector(group, eps, mult, k, seed);
    bases.push_back(ComputeBlockBasis(*index, mult, k, v));
  }
  return FromBases(std::move(index), bases);
}

BasicBlockSet BasicBlockSet::FromBases(std::shared_ptr<const OrbitIndex> index,
                                       const std::vector<BlockBasis>& bases) {
  BasicBlockSet set;
  set.index_ = std::move(index);
  for (const BlockBasis& basis : bases) {
    set.blocks_.push_back(
        {basis.k, basis.m, basis.degree, basis.class_dim, basis.class_offset});
  }
  set.Allocate();
  const SymmetricGroup& group = set.index_->group();
  const int order = group.order();
  const int num_orbits = set.index_->num_orbits();
  const OrbitId* ids = set.index_->ids().data();
  for (size_t b = 0; b < bases.size(); ++b) {
    const BlockBasis& basis = bases[b];
    const Block& block = set.blocks_[b];
    // coef[phi * m + j]: local coordinate j of element phi (only the first
    // class_dim entries are used).
    std::vector<double> coef(static_cast<size_t>(order) * block.m, 0.0);
    std::vector<int> dim_of(order);
    for (int phi = 0; phi < order; ++phi) {
      const int cls = group.class_of(phi);
      dim_of[phi] = block.class_dim[cls];
      for (int j = 0; j < dim_of[phi]; ++j) {
        coef[static_cast<size_t>(phi) * block.m + j] =
            basis.vectors[block.class_offset[cls] + j][phi];
      }
    }
    // Per row phi: w_l = sum of coef(psi) over (phi, psi) in O_l, then
    // B_{lk} += coef(phi) w_l^T.
    std::vector<size_t> wofs(num_orbits + 2, 0);
    for (int l = 1; l <= num_orbits; ++l) {
      wofs[l + 1] = wofs[l] + block.class_dim[set.index_->info(l).col_class];
    }
    std::vector<double> w(wofs[num_orbits + 1], 0.0);
    std::vector<char> touched(num_orbits + 1, 0);
    std::vector<OrbitId> touched_list;
    double* data = set.data_[b].data();
    for (int phi = 0; phi < order; ++phi) {
      const int rows = dim_of[phi];
      if (rows == 0) continue;
      const OrbitId* row = ids + static_cast<size_t>(phi) * order;
      for (int psi = 0; psi < order; ++psi) {
        const int cols = dim_of[psi];
        if (cols == 0) continue;
        const OrbitId l = row[psi];
        if (!touched[l]) {
          touched[l] = 1;
          touched_list.push_back(l);
        }
        double* wl = w.data() + wofs[l];
        const double* c = coef.data() + static_cast<size_t>(psi) * block.m;
        for (int j = 0; j < cols; ++j) wl[j] += c[j];
      }
      const double* cphi = coef.data() + static_cast<size_t>(phi) * block.m;
      for (OrbitId l : touched_list) {
        double* wl = w.data() + wofs[l];
        const int cols = static_cast<int>(wofs[l + 1] - wofs[l]);
        double* out = data + set.offset_[b][l - 1];
        for (int a = 0; a < rows; ++a) {
          for (int j = 0; j < cols; ++j) out[a * cols + j] += cphi[a] * wl[j];
        }
        std::fill(wl, wl + cols, 0.0);
        touched[l] = 0;
      }
      touched_list.clear();
    }
  }
  return set;
}

Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                               Eigen::RowMajor>>
BasicBlockSet::SubBlock(int b, OrbitId l) const {
  const OrbitInfo& info = index_->info(l);
  return {data_[b].data() + offset_[b][l - 1],
          blocks_[b].class_dim[info.row_class],
          blocks_[b].class_dim[info.col_class]};
}

Eigen::MatrixXd BasicBlockSet::Image(int b, OrbitId l) const {
  const Block& block = blocks_[b];
  const OrbitInfo& info = index_->info(l);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(block.m, block.m);
  const auto sub = SubBlock(b, l);
  out.block(block.class_offset[info.row_class],
            block.class_offset[info.col_class], sub.rows(), sub.cols()) = sub;
  return out;
}

std::vector<Eigen::MatrixXd> BasicBlockSet::BlockImage(
    std::span<const double> c) const {
  std::vector<Eigen::MatrixXd> out;
  for (int b = 0; b < num_blocks(); ++b) {
    const Block& block = blocks_[b];
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(block.m, block.m);
    for (int l = 1; l <= index_->num_orbits(); ++l) {
      if (c[l - 1] == 0) continue;
      const OrbitInfo& info = index_->info(l);
      const auto sub = SubBlock(b, l);
      m.block(block.class_offset[info.row_class],
              block.class_offset[info.col_class], sub.rows(), sub.cols()) +=
          c[l - 1] * sub;
    }
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

void PutU32(std::ofstream& out, uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v),
                        static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16),
                        static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

uint32_t GetU32(std::ifstream& in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) {
    throw std::runtime_error("basic block file truncated");
  }
  return b[0] | (b[1] << 8) | (b[2] << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

void PutF64(std::ofstream& out, double v) {
  uint64_t bits;
  std::memcpy(&bits, &v, 8);
  PutU32(out, static_cast<uint32_t>(bits));
  PutU32(out, static_cast<uint32_t>(bits >> 32));
}

double GetF64(std::ifstream& in) {
  const uint64_t lo = GetU32(in);
  const uint64_t hi = GetU32(in);
  const uint64_t bits = lo | (hi << 32);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

}  // namespace

void BasicBlockSet::Save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write("PCBB", 4);
  out.put(1);
  out.put(static_cast<char>(index_->n()));
  PutU32(out, blocks_.size());
  PutU32(out, index_->num_orbits());
  for (const Block& block : blocks_) {
    PutU32(out, block.k);
    PutU32(out, block.m);
    PutU32(out, static_cast<uint32_t>(block.degree));
    for (int d : block.class_dim) PutU32(out, d);
  }
  for (int b = 0; b < num_blocks(); ++b) {
    for (int l = 1; l <= index_->num_orbits(); ++l) {
      const Eigen::MatrixXd m = Image(b, l);
      for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) PutF64(out, m(r, c));
      }
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

BasicBlockSet BasicBlockSet::Load(const std::string& path,
                                  std::shared_ptr<const OrbitIndex> index) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, "PCBB", 4) != 0) {
    throw std::runtime_error(path + " is not a basic block file");
  }
  const int version = in.get();
  const int n = in.get();
  if (version != 1) throw std::runtime_error("unsupported block file version");
  if (n != index->n()) {
    throw std::runtime_error("block file is for n = " + std::to_string(n));
  }
  const uint32_t num_blocks = GetU32(in);
  const uint32_t num_orbits = GetU32(in);
  if (static_cast<int>(num_orbits) != index->num_orbits()) {
    throw std::runtime_error("block file orbit count mismatch");
  }
  const int classes = index->group().num_classes();
  BasicBlockSet set;
  set.index_ = std::move(index);
  for (uint32_t b = 0; b < num_blocks; ++b) {
    Block block;
    block.k = static_cast<int>(GetU32(in));
    block.m = static_cast<int>(GetU32(in));
    block.degree = GetU32(in);
    block.class_offset.assign(classes + 1, 0);
    for (int i = 0; i < classes; ++i) {
      block.class_dim.push_back(static_cast<int>(GetU32(in)));
      block.class_offset[i + 1] = block.class_offset[i] + block.class_dim[i];
    }
    if (block.class_offset[classes] != block.m) {
      throw std::runtime_error("block file: class dimensions do not sum to m");
    }
    set.blocks_.push_back(std::move(block));
  }
  set.Allocate();
  for (uint32_t b = 0; b < num_blocks; ++b) {
    const Block& block = set.blocks_[b];
    Eigen::MatrixXd m(block.m, block.m);
    for (uint32_t l = 1; l <= num_orbits; ++l) {
      for (int r = 0; r < block.m; ++r) {
        for (int c = 0; c < block.m; ++c) m(r, c) = GetF64(in);
      }
      const OrbitInfo& info = set.index_->info(l);
      const int rows = block.class_dim[info.row_class];
      const int cols = block.class_dim[info.col_class];
      double* out = set.data_[b].data() + set.offset_[b][l - 1];
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          out[r * cols + c] = m(block.class_offset[info.row_class] + r,
                                block.class_offset[info.col_class] + c);
        }
      }
    }
  }
  return set;
}

}  // namespace permcode
