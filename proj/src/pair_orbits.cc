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

#include "permcode/pair_orbits.h"

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "permcode/errors.h"
#include "permcode/rational.h"

namespace permcode {
namespace {

// sum over classes |C_mu| * f(mu), with the per-class centralizer order
// z_mu = sum_chi chi(mu)^2 and square-root count s_mu = sum_chi chi(mu).
template <typename F>
BigInt ClassSum(const CharacterTable& table, F f) {
  BigInt total = 0;
  for (int c = 0; c < table.size(); ++c) {
    const BigInt z = table.centralizer_size(c);
    const BigInt s = table.SquareRootCount(c);
    total += BigInt(table.class_size(c)) * f(z, s);
  }
  return total;
}

}  // namespace

int64_t BurnsideCount(const CharacterTable& table) {
  const BigInt sum = ClassSum(
      table, [](const BigInt& z, const BigInt& s) { return z * z + s * s * s; });
  return ExactDivide(sum, BigInt(2) * Factorial(table.n()), "BurnsideCount")
      .convert_to<int64_t>();
}

int64_t BurnsideCountWithSwap(const CharacterTable& table) {
  const BigInt cross =
      ClassSum(table, [](const BigInt& z, const BigInt& s) { return s * z; });
  const BigInt swapped =
      ExactDivide(cross, BigInt(Factorial(table.n())), "BurnsideCountWithSwap");
  return ExactDivide(BigInt(BurnsideCount(table)) + swapped, BigInt(2),
                     "BurnsideCountWithSwap")
      .convert_to<int64_t>();
}

OrbitIndex::OrbitIndex(std::shared_ptr<const SymmetricGroup> group,
                       std::vector<OrbitId> ids)
    : group_(std::move(group)), ids_(std::move(ids)) {}

namespace {
void CheckEnumerationDegree(int n) {
  if (n > OrbitIndex::kMaxEnumerationDegree) {
    throw CapacityError(
        "orbit enumeration needs (n!)^2 ids and is limited to n <= 7; for "
        "n >= 8 only the closed-form orbit counts are available (the SDP has "
        "too many variables there)");
  }
}
}  // namespace

std::shared_ptr<const OrbitIndex> OrbitIndex::Enumerate(int n) {
  CheckEnumerationDegree(n);
  return Enumerate(std::make_shared<const SymmetricGroup>(n));
}

std::shared_ptr<const OrbitIndex> OrbitIndex::Enumerate(
    std::shared_ptr<const SymmetricGroup> group) {
  const int n = group->n();
  CheckEnumerationDegree(n);
  const int order = group->order();

  // Generator actions on ranks. Conjugation by g: phi -> g phi g^{-1}.
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<int> swap(n), cycle(n);
    for (int i = 0; i < n; ++i) {
      swap[i] = i + 1;
      cycle[i] = (i + 1) % n + 1;
    }
    std::swap(swap[0], swap[1]);
    gens.push_back(Permutation::FromImages(swap));
    gens.push_back(Permutation::FromImages(cycle));
  }
  std::vector<std::vector<int>> conj(gens.size(), std::vector<int>(order));
  for (size_t g = 0; g < gens.size(); ++g) {
    const Permutation inv = gens[g].Inverse();
    for (int r = 0; r < order; ++r) {
      conj[g][r] = static_cast<int>((gens[g] * group->element(r) * inv).Rank());
    }
  }

  const size_t pairs = static_cast<size_t>(order) * order;
  std::vector<OrbitId> ids(pairs, 0);
  std::vector<uint32_t> queue;
  OrbitId next = 0;
  for (size_t start = 0; start < pairs; ++start) {
    if (ids[start] != 0) continue;
    ++next;
    ids[start] = next;
    queue.clear();
    queue.push_back(static_cast<uint32_t>(start));
    for (size_t head = 0; head < queue.size(); ++head) {
      const int phi = static_cast<int>(queue[head] / order);
      const int psi = static_cast<int>(queue[head] % order);
      auto visit = [&](int a, int b) {
        const size_t idx = static_cast<size_t>(a) * order + b;
        if (ids[idx] == 0) {
          ids[idx] = next;
          queue.push_back(static_cast<uint32_t>(idx));
        }
      };
      for (const auto& c : conj) visit(c[phi], c[psi]);
      visit(group->inverse_of(phi), group->inverse_of(psi));
    }
  }
  // Pair index 0 is (id, id), so it received orbit id 1.
  std::shared_ptr<OrbitIndex> index(new OrbitIndex(std::move(group), std::move(ids)));
  index->BuildMetadata();
  return index;
}

void OrbitIndex::BuildMetadata() {
  const SymmetricGroup& g = *group_;
  const int order = g.order();
  OrbitId max_id = 0;
  for (OrbitId id : ids_) max_id = std::max(max_id, id);
  info_.assign(max_id, OrbitInfo{});
  std::vector<bool> seen(max_id + 1, false);
  for (size_t idx = 0; idx < ids_.size(); ++idx) {
    const OrbitId l = ids_[idx];
    OrbitInfo& o = info_[l - 1];
    ++o.size;
    if (seen[l]) continue;
    seen[l] = true;
    o.rep_phi = static_cast<int>(idx / order);
    o.rep_psi = static_cast<int>(idx % order);
    o.row_class = g.class_of(o.rep_phi);
    o.col_class = g.class_of(o.rep_psi);
    o.quotient_class = g.class_of(g.Quotient(o.rep_phi, o.rep_psi));
    o.transpose = orbit_of(o.rep_psi, o.rep_phi);
  }
  const int m = g.num_classes();
  left_id_.resize(m);
  right_id_.resize(m);
  diagonal_.resize(m);
  for (int j = 0; j < m; ++j) {
    const int rep = g.class_members(j).front();
    left_id_[j] = orbit_of(0, rep);
    right_id_[j] = orbit_of(rep, 0);
    diagonal_[j] = orbit_of(rep, rep);
  }
}

int OrbitIndex::NumTransposeClasses() const {
  int count = 0;
  for (OrbitId l = 1; l <= static_cast<OrbitId>(num_orbits()); ++l) {
    if (info(l).transpose >= l) ++count;
  }
  return count;
}

namespace {
constexpr char kMagic[4] = {'P', 'C', 'O', 'I'};
constexpr uint8_t kVersion = 1;

void PutU32(std::ostream& out, uint32_t v) {
  const std::array<char, 4> bytes = {
      static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
      static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(bytes.data(), 4);
}

uint32_t GetU32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}
}  // namespace

void OrbitIndex::Save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(kMagic, 4);
  out.put(static_cast<char>(kVersion));
  out.put(static_cast<char>(n()));
  PutU32(out, static_cast<uint32_t>(num_orbits()));
  std::vector<char> buf;
  buf.reserve(4 * ids_.size());
  for (OrbitId id : ids_) {
    for (int s = 0; s < 32; s += 8) buf.push_back(static_cast<char>((id >> s) & 0xff));
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::shared_ptr<const OrbitIndex> OrbitIndex::Load(
    const std::string& path, std::shared_ptr<const SymmetricGroup> group) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  unsigned char header[10];
  in.read(reinterpret_cast<char*>(header), sizeof(header));
  if (!in || std::memcmp(header, kMagic, 4) != 0 || header[4] != kVersion) {
    throw std::runtime_error(path + ": not a PCOI v1 orbit file");
  }
  if (header[5] != group->n()) {
    throw std::runtime_error(path + ": degree does not match");
  }
  const uint32_t m = GetU32(header + 6);
  const size_t pairs = static_cast<size_t>(group->order()) * group->order();
  std::vector<unsigned char> raw(4 * pairs);
  in.read(reinterpret_cast<char*>(raw.data()),
          static_cast<std::streamsize>(raw.size()));
  if (!in) throw std::runtime_error(path + ": truncated orbit array");
  std::vector<OrbitId> ids(pairs);
  for (size_t i = 0; i < pairs; ++i) {
    ids[i] = GetU32(raw.data() + 4 * i);
    if (ids[i] < 1 || ids[i] > m) {
      throw std::runtime_error(path + ": orbit id out of range");
    }
  }
  std::shared_ptr<OrbitIndex> index(new OrbitIndex(std::move(group), std::move(ids)));
  index->BuildMetadata();
  if (index->num_orbits() != static_cast<int>(m)) {
    throw std::runtime_error(path + ": orbit count mismatch");
  }
  return index;
}

}  // namespace permcode
