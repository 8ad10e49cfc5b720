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

#include "permcode/sdpa_format.h"

#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace permcode {
namespace {

constexpr char kOffsetTag[] = "objective_offset";
constexpr char kBlockTag[] = "block";

void WriteEntries(const Eigen::MatrixXd& m, int mat, int blk, double sign,
                  std::ostream& out) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      const double v = sign * m(i, j);
      if (v != 0) {
        out << mat << ' ' << blk << ' ' << i + 1 << ' ' << j + 1 << ' ' << v
            << '\n';
      }
    }
  }
}

[[noreturn]] void Malformed(const std::string& why) {
  throw std::runtime_error("malformed SDPA input: " + why);
}

}  // namespace

void WriteSdpa(const SdpInstance& p, std::ostream& out) {
  const int nb = static_cast<int>(p.dense.size() + p.diagonal.size());
  out << std::setprecision(17);
  out << "* " << kOffsetTag << ' ' << p.objective_offset << '\n';
  int blk = 1;
  for (const auto& b : p.dense) out << "* " << kBlockTag << ' ' << blk++ << ' ' << b.label << '\n';
  for (const auto& b : p.diagonal) out << "* " << kBlockTag << ' ' << blk++ << ' ' << b.label << '\n';
  out << p.num_vars << '\n' << nb << '\n';
  for (const auto& b : p.dense) out << b.dim << ' ';
  for (const auto& b : p.diagonal) out << -b.dim << ' ';
  out << '\n';
  for (int i = 0; i < p.num_vars; ++i) {
    out << (i ? " " : "") << -p.objective[i];
  }
  out << '\n';
  blk = 1;
  for (const auto& b : p.dense) {
    WriteEntries(b.constant, 0, blk, -1, out);
    for (size_t j = 0; j < b.vars.size(); ++j) {
      WriteEntries(b.Coefficient(static_cast<int>(j)), b.vars[j] + 1, blk, 1,
                   out);
    }
    ++blk;
  }
  for (const auto& b : p.diagonal) {
    for (int r = 0; r < b.dim; ++r) {
      if (b.constant[r] != 0) {
        out << 0 << ' ' << blk << ' ' << r + 1 << ' ' << r + 1 << ' '
            << -b.constant[r] << '\n';
      }
    }
    // Merge duplicate (var, row) entries so each is written once.
    std::map<std::pair<int, int>, double> merged;
    for (const auto& e : b.entries) merged[{e.var, e.row}] += e.value;
    for (const auto& [key, v] : merged) {
      if (v != 0) {
        out << key.first + 1 << ' ' << blk << ' ' << key.second + 1 << ' '
            << key.second + 1 << ' ' << v << '\n';
      }
    }
    ++blk;
  }
}

SdpInstance ReadSdpa(std::istream& in) {
  SdpInstance p;
  std::map<int, std::string> labels;
  std::string body, line;
  while (std::getline(in, line)) {
    if (!line.empty() && (line[0] == '*' || line[0] == '"')) {
      std::istringstream c(line.substr(1));
      std::string tag;
      c >> tag;
      if (tag == kOffsetTag) {
        c >> p.objective_offset;
      } else if (tag == kBlockTag) {
        int b;
        std::string label;
        c >> b;
        std::getline(c >> std::ws, label);
        labels[b] = label;
      }
      continue;
    }
    for (char& ch : line) {
      if (ch == '{' || ch == '}' || ch == ',' || ch == '(' || ch == ')') {
        ch = ' ';
      }
    }
    body += line;
    body += '\n';
  }
  std::istringstream t(body);
  int nb = 0;
  if (!(t >> p.num_vars >> nb) || p.num_vars < 0 || nb < 0) {
    Malformed("header");
  }
  std::vector<int> sizes(nb);
  for (int& s : sizes) {
    if (!(t >> s) || s == 0) Malformed("block structure");
  }
  p.objective.resize(p.num_vars);
  for (int i = 0; i < p.num_vars; ++i) {
    double v;
    if (!(t >> v)) Malformed("objective");
    p.objective[i] = -v;
  }
  // Per block: constant plus one matrix per variable that appears.
  std::vector<Eigen::MatrixXd> constant(nb);
  std::vector<std::map<int, Eigen::MatrixXd>> coef(nb);
  for (int b = 0; b < nb; ++b) {
    const int d = std::abs(sizes[b]);
    constant[b] = Eigen::MatrixXd::Zero(d, d);
  }
  int mat, blk, i, j;
  double v;
  while (t >> mat >> blk >> i >> j >> v) {
    if (mat < 0 || mat > p.num_vars || blk < 1 || blk > nb) {
      Malformed("entry index");
    }
    const int d = std::abs(sizes[blk - 1]);
    if (i < 1 || j < 1 || i > d || j > d) Malformed("entry position");
    if (sizes[blk - 1] < 0 && i != j) Malformed("off-diagonal entry");
    Eigen::MatrixXd* m;
    if (mat == 0) {
      m = &constant[blk - 1];
      v = -v;
    } else {
      auto [it, inserted] = coef[blk - 1].try_emplace(mat - 1);
      if (inserted) it->second = Eigen::MatrixXd::Zero(d, d);
      m = &it->second;
    }
    (*m)(i - 1, j - 1) = v;
    (*m)(j - 1, i - 1) = v;
  }
  if (!t.eof()) Malformed("trailing tokens");
  for (int b = 0; b < nb; ++b) {
    const int d = std::abs(sizes[b]);
    const std::string label = labels.count(b + 1) ? labels[b + 1] : "";
    if (sizes[b] > 0) {
      DenseSdpBlock blk_out;
      blk_out.label = label;
      blk_out.dim = d;
      blk_out.constant = constant[b];
      blk_out.coef.resize(d * d, 0);
      for (const auto& [var, m] : coef[b]) {
        SdpInstance::AppendCoefficient(blk_out, var, m);
      }
      p.dense.push_back(std::move(blk_out));
    } else {
      DiagonalSdpBlock blk_out;
      blk_out.label = label;
      blk_out.dim = d;
      blk_out.constant = constant[b].diagonal();
      for (const auto& [var, m] : coef[b]) {
        for (int r = 0; r < d; ++r) {
          if (m(r, r) != 0) blk_out.entries.push_back({var, r, m(r, r)});
        }
      }
      p.diagonal.push_back(std::move(blk_out));
    }
  }
  return p;
}

}  // namespace permcode
