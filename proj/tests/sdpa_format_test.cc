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

#include <sstream>
#include <stdexcept>

#include "gtest/gtest.h"

namespace permcode {
namespace {

SdpInstance Sample() {
  SdpInstance p;
  p.num_vars = 3;
  p.objective = Eigen::Vector3d(1, -2, 0.1);
  p.objective_offset = 1.0 / 3;
  DenseSdpBlock b;
  b.label = "k=2 main";
  b.dim = 3;
  b.constant = Eigen::MatrixXd::Identity(3, 3) / 7;
  b.coef.resize(9, 0);
  Eigen::MatrixXd a(3, 3);
  a << 0, 1, 0, 1, 0, 2.5, 0, 2.5, -1;
  SdpInstance::AppendCoefficient(b, 0, a);
  SdpInstance::AppendCoefficient(b, 2, a * a);
  p.dense.push_back(b);
  DiagonalSdpBlock d;
  d.label = "box";
  d.dim = 2;
  d.constant = Eigen::Vector2d(1, 0);
  d.entries = {{1, 0, -1}, {1, 1, 1}, {2, 1, 0.25}};
  p.diagonal.push_back(d);
  return p;
}

TEST(SdpaFormatTest, RoundTrip) {
  const SdpInstance p = Sample();
  std::stringstream s;
  WriteSdpa(p, s);
  const SdpInstance q = ReadSdpa(s);
  EXPECT_EQ(q.num_vars, 3);
  EXPECT_EQ(q.objective, p.objective);
  EXPECT_EQ(q.objective_offset, p.objective_offset);
  ASSERT_EQ(q.dense.size(), 1u);
  ASSERT_EQ(q.diagonal.size(), 1u);
  EXPECT_EQ(q.dense[0].label, "k=2 main");
  EXPECT_EQ(q.diagonal[0].label, "box");
  EXPECT_EQ(q.dense[0].vars, (std::vector<int>{0, 2}));
  EXPECT_EQ(q.dense[0].constant, p.dense[0].constant);
  EXPECT_EQ(q.dense[0].coef, p.dense[0].coef);
  const Eigen::VectorXd y = Eigen::Vector3d(0.3, -1.1, 2);
  EXPECT_EQ(q.diagonal[0].Evaluate(y), p.diagonal[0].Evaluate(y));
}

TEST(SdpaFormatTest, SolvesTheSameAfterRoundTrip) {
  SdpInstance p;
  p.num_vars = 1;
  p.objective = Eigen::VectorXd::Ones(1);
  DenseSdpBlock b;
  b.dim = 2;
  b.constant = Eigen::MatrixXd::Identity(2, 2);
  b.coef.resize(4, 0);
  Eigen::MatrixXd a(2, 2);
  a << 0, 1, 1, 0;
  SdpInstance::AppendCoefficient(b, 0, a);
  p.dense.push_back(b);
  std::stringstream s;
  WriteSdpa(p, s);
  const SdpSolution r = SolveSdp(ReadSdpa(s));
  ASSERT_EQ(r.status, SdpStatus::kOptimal);
  EXPECT_NEAR(r.primal_objective, 1, 1e-7);
}

TEST(SdpaFormatTest, AcceptsBracesAndParentheses) {
  std::istringstream s(
      "\"a comment\n2 =mdim\n2 =nblocks\n{2, -1}\n(1.0, 2.0)\n"
      "0 1 1 1 -3\n1 1 1 2 1\n2 2 1 1 1\n");
  // The "=mdim" style trailers are not accepted.
  EXPECT_THROW(ReadSdpa(s), std::runtime_error);
  std::istringstream ok(
      "\"a comment\n2\n2\n{2, -1}\n(1.0, 2.0)\n"
      "0 1 1 1 -3\n1 1 1 2 1\n2 2 1 1 1\n");
  const SdpInstance p = ReadSdpa(ok);
  EXPECT_EQ(p.num_vars, 2);
  EXPECT_EQ(p.objective, Eigen::Vector2d(-1, -2));
  EXPECT_EQ(p.dense[0].constant(0, 0), 3);
  EXPECT_EQ(p.dense[0].Coefficient(0)(1, 0), 1);
  EXPECT_EQ(p.diagonal[0].entries.size(), 1u);
}

TEST(SdpaFormatTest, RejectsBadEntries) {
  std::istringstream bad_block("1\n1\n2\n1\n1 3 1 1 1\n");
  EXPECT_THROW(ReadSdpa(bad_block), std::runtime_error);
  std::istringstream bad_pos("1\n1\n2\n1\n1 1 3 1 1\n");
  EXPECT_THROW(ReadSdpa(bad_pos), std::runtime_error);
  std::istringstream off_diag("1\n1\n-2\n1\n1 1 1 2 1\n");
  EXPECT_THROW(ReadSdpa(off_diag), std::runtime_error);
}

}  // namespace
}  // namespace permcode
