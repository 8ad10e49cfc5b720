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

#ifndef PERMCODE_BLOCK_DIAG_H_
#define PERMCODE_BLOCK_DIAG_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "Eigen/Dense"
#include "permcode/centralizer_algebra.h"
#include "permcode/pair_orbits.h"

namespace permcode {

inline constexpr uint64_t kDefaultSeed = 20260101;

// Projects onto a single Gelfand-Tsetlin line of each irreducible of Sym(n)
// of shape `shape`: the product over j = n-1, ..., 2 of the central
// idempotents of Sym(j) (permutations fixing the last n - j points) for the
// shapes obtained by repeatedly deleting the last box of the last row.
// Acts by conjugation like the rest of the group action.
class ChainProjector {
 public:
  ChainProjector(const SymmetricGroup& group, const Partition& shape);
  std::vector<double> Apply(std::span<const double> x) const;

 private:
  struct Stage {
    std::vector<int> elements;
    std::vector<double> weights;
  };
  const SymmetricGroup& group_;
  std::vector<Stage> stages_;
};

// A nonzero v = eps_k P x, where P is the chain projector of character k's
// partition; B v then spans a space of dimension exactly m_k. Probes e_id,
// then e_pi for seeded random pi, then a seeded dense random vector; accepts
// when |v| >= 1e-6 |probe|. Throws std::invalid_argument if m_k = 0 and
// ConsistencyError if every probe fails.
std::vector<double> SeedVector(const SymmetricGroup& group,
                               const IdempotentAction& eps,
                               const MultiplicityTable& mult, int k,
                               uint64_t seed = kDefaultSeed);

// Orthonormal basis of U_k = B v_k. Every basis vector is supported on one
// conjugacy class; class i carries coefficient[k][i] of them, in class order.
struct BlockBasis {
  int k = 0;
  int m = 0;
  int64_t degree = 0;
  std::vector<int> class_dim;
  std::vector<int> class_offset;
  std::vector<std::vector<double>> vectors;
  // Residual norms at acceptance, relative to the largest candidate norm.
  std::vector<double> accepted_norms;
};

// Throws ConsistencyError when the dimension found for some class differs
// from the multiplicity coefficient.
BlockBasis ComputeBlockBasis(const OrbitIndex& index,
                             const MultiplicityTable& mult, int k,
                             std::span<const double> seed);

// The basic blocks B_{lk} for every orbit l and every k with m_k > 0.
class BasicBlockSet {
 public:
  struct Block {
    int k = 0;
    int m = 0;
    int64_t degree = 0;
    std::vector<int> class_dim;
    std::vector<int> class_offset;
  };

  static BasicBlockSet Compute(std::shared_ptr<const OrbitIndex> index,
                               uint64_t seed = kDefaultSeed);
  // Builds blocks from explicit bases; used by Compute and by tests.
  static BasicBlockSet FromBases(std::shared_ptr<const OrbitIndex> index,
                                 const std::vector<BlockBasis>& bases);

  const OrbitIndex& index() const { return *index_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const Block& block(int b) const { return blocks_[b]; }

  // Nonzero part of B_{lk}: rows of class row_class(l), columns of class
  // col_class(l), row-major.
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
  SubBlock(int b, OrbitId l) const;
  Eigen::MatrixXd Image(int b, OrbitId l) const;
  // sum_l c[l - 1] B_{lk} for every block.
  std::vector<Eigen::MatrixXd> BlockImage(std::span<const double> c) const;

  // Little-endian: magic "PCBB", version byte (1), n as one byte, u32 block
  // count, u32 orbit count M; per block u32 k, u32 m_k, u32 d_k and one u32
  // dimension per class; then per block and per orbit l = 1..M the dense
  // row-major m_k x m_k float64 matrix B_{lk}.
  void Save(const std::string& path) const;
  static BasicBlockSet Load(const std::string& path,
                            std::shared_ptr<const OrbitIndex> index);

 private:
  std::shared_ptr<const OrbitIndex> index_;
  std::vector<Block> blocks_;
  // offset_[b][l - 1] into data_[b].
  std::vector<std::vector<size_t>> offset_;
  std::vector<std::vector<double>> data_;

  void Allocate();
};

}  // namespace permcode

#endif  // PERMCODE_BLOCK_DIAG_H_
