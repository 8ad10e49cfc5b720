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

#ifndef PERMCODE_PAIR_ORBITS_H_
#define PERMCODE_PAIR_ORBITS_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "permcode/character_table.h"
#include "permcode/symmetric_group.h"

namespace permcode {

// Number of orbits of Sym(n)^2 under simultaneous conjugation and inversion,
// by Burnside's lemma evaluated class by class:
//   b_n = (1/2n!) sum_alpha [ (sum_chi chi(alpha)^2)^2 + (sum_chi chi(alpha))^3 ].
// Valid for 2 <= n <= kMaxDegree. Throws ConsistencyError on inexact division.
int64_t BurnsideCount(const CharacterTable& table);

// Orbit count when coordinate swaps are added to the group:
//   b*_n = (b_n + (1/n!) sum_alpha (sum_chi chi(alpha)) (sum_chi chi(alpha)^2)) / 2.
int64_t BurnsideCountWithSwap(const CharacterTable& table);

// Orbit ids are 1-based; orbit 1 is always {(id, id)}.
using OrbitId = uint32_t;

struct OrbitInfo {
  int64_t size = 0;
  // Lowest pair index phi * n! + psi in the orbit.
  int rep_phi = 0;
  int rep_psi = 0;
  // Classes of phi and psi (the block C_row x C_col supporting B_l).
  int row_class = 0;
  int col_class = 0;
  // Class of phi psi^{-1}, constant on the orbit.
  int quotient_class = 0;
  // Orbit of the swapped pairs (psi, phi).
  OrbitId transpose = 0;
};

// Orbits O_1..O_M of Sym(n)^2 under Iso_1(n) = conjugation x inversion,
// with an (n!)^2 lookup from ranked pairs to orbit ids. Immutable once built.
class OrbitIndex {
 public:
  static constexpr int kMaxEnumerationDegree = 7;

  // Flood fill using the generators {conjugation by (1 2), conjugation by
  // (1 2 ... n), simultaneous inversion}. Throws CapacityError for n >= 8.
  static std::shared_ptr<const OrbitIndex> Enumerate(
      std::shared_ptr<const SymmetricGroup> group);
  static std::shared_ptr<const OrbitIndex> Enumerate(int n);

  // Reads the "PCOI" binary format written by Save(). Throws
  // std::runtime_error on a malformed file.
  static std::shared_ptr<const OrbitIndex> Load(
      const std::string& path, std::shared_ptr<const SymmetricGroup> group);
  // Little-endian: magic "PCOI", version byte (1), n as one byte, M as u32,
  // then (n!)^2 u32 orbit ids in pair-index order phi * n! + psi.
  void Save(const std::string& path) const;

  int n() const { return group_->n(); }
  const SymmetricGroup& group() const { return *group_; }
  const std::shared_ptr<const SymmetricGroup>& group_ptr() const {
    return group_;
  }
  int num_orbits() const { return static_cast<int>(info_.size()); }
  const OrbitInfo& info(OrbitId l) const { return info_[l - 1]; }

  OrbitId orbit_of(int phi, int psi) const {
    return ids_[static_cast<size_t>(phi) * group_->order() + psi];
  }
  OrbitId orbit_of(const Permutation& phi, const Permutation& psi) const {
    return orbit_of(static_cast<int>(phi.Rank()), static_cast<int>(psi.Rank()));
  }
  // Row-major over (phi, psi).
  const std::vector<OrbitId>& ids() const { return ids_; }

  // {id} x C_j, C_j x {id} and the diagonal of C_j, indexed by class j.
  // Entry 0 is orbit 1 for all three.
  OrbitId left_identity_orbit(int cls) const { return left_id_[cls]; }
  OrbitId right_identity_orbit(int cls) const { return right_id_[cls]; }
  OrbitId diagonal_orbit(int cls) const { return diagonal_[cls]; }

  // Number of classes {l, transpose(l)}: equals b*_n.
  int NumTransposeClasses() const;

 private:
  OrbitIndex(std::shared_ptr<const SymmetricGroup> group,
             std::vector<OrbitId> ids);
  void BuildMetadata();

  std::shared_ptr<const SymmetricGroup> group_;
  std::vector<OrbitId> ids_;
  std::vector<OrbitInfo> info_;
  std::vector<OrbitId> left_id_, right_id_, diagonal_;
};

}  // namespace permcode

#endif  // PERMCODE_PAIR_ORBITS_H_
