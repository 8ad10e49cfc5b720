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

#include "permcode/sdp_solver.h"

#include <cmath>
#include <cstdlib>

#include "gtest/gtest.h"

namespace permcode {
namespace {

DenseSdpBlock Block(int dim, const Eigen::MatrixXd& constant) {
  DenseSdpBlock b;
  b.dim = dim;
  b.constant = constant;
  b.coef.resize(dim * dim, 0);
  return b;
}

TEST(SdpSolverTest, SmallestEigenvalue) {
  Eigen::MatrixXd c(3, 3);
  c << 4, 1, 0, 1, 3, 1, 0, 1, 5;
  SdpInstance p;
  p.num_vars = 1;
  p.objective = Eigen::VectorXd::Ones(1);
  p.dense.push_back(Block(3, c));
  SdpInstance::AppendCoefficient(p.dense[0], 0, -Eigen::MatrixXd::Identity(3, 3));
  const SdpSolution s = SolveSdp(p);
  ASSERT_EQ(s.status, SdpStatus::kOptimal) << s.message;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c);
  EXPECT_NEAR(s.primal_objective, es.eigenvalues()[0], 1e-7);
  EXPECT_NEAR(s.dual_objective, es.eigenvalues()[0], 1e-7);
}

TEST(SdpSolverTest, LinearProgram) {
  // max x1 + x2 with x1 + 2 x2 <= 4, 2 x1 + x2 <= 3, x >= 0.
  SdpInstance p;
  p.num_vars = 2;
  p.objective = Eigen::VectorXd::Ones(2);
  DiagonalSdpBlock d;
  d.dim = 4;
  d.constant = Eigen::Vector4d(4, 3, 0, 0);
  d.entries = {{0, 0, -1}, {1, 0, -2}, {0, 1, -2}, {1, 1, -1},
               {0, 2, 1},  {1, 3, 1}};
  p.diagonal.push_back(d);
  const SdpSolution s = SolveSdp(p);
  ASSERT_EQ(s.status, SdpStatus::kOptimal) << s.message;
  EXPECT_NEAR(s.primal_objective, 7.0 / 3, 1e-7);
  EXPECT_NEAR(s.y[0], 2.0 / 3, 1e-6);
  EXPECT_NEAR(s.y[1], 5.0 / 3, 1e-6);
  EXPECT_GE(s.min_eigenvalues[0], -1e-7);
}

TEST(SdpSolverTest, PentagonTheta) {
  // theta(C5) = min t s.t. t I - J + sum_e z_e E_e >= 0.
  SdpInstance p;
  p.num_vars = 6;
  p.objective = Eigen::VectorXd::Zero(6);
  p.objective[0] = -1;
  p.dense.push_back(Block(5, -Eigen::MatrixXd::Ones(5, 5)));
  SdpInstance::AppendCoefficient(p.dense[0], 0, Eigen::MatrixXd::Identity(5, 5));
  for (int e = 0; e < 5; ++e) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(5, 5);
    a(e, (e + 1) % 5) = a((e + 1) % 5, e) = 1;
    SdpInstance::AppendCoefficient(p.dense[0], e + 1, a);
  }
  const SdpSolution s = SolveSdp(p);
  ASSERT_EQ(s.status, SdpStatus::kOptimal) << s.message;
  EXPECT_NEAR(-s.primal_objective, std::sqrt(5.0), 1e-7);
  EXPECT_LT(s.iterations, 60);
}

TEST(SdpSolverTest, UnreachableToleranceGivesNearOptimal) {
  Eigen::MatrixXd c(3, 3);
  c << 4, 1, 0, 1, 3, 1, 0, 1, 5;
  SdpInstance p;
  p.num_vars = 1;
  p.objective = Eigen::VectorXd::Ones(1);
  p.dense.push_back(Block(3, c));
  SdpInstance::AppendCoefficient(p.dense[0], 0, -Eigen::MatrixXd::Identity(3, 3));
  SdpOptions o;
  o.tolerance = 1e-30;
  const SdpSolution s = SolveSdp(p, o);
  EXPECT_EQ(s.status, SdpStatus::kNearOptimal);
  EXPECT_TRUE(Converged(s.status));
  EXPECT_NE(s.message.find("reduced accuracy"), std::string::npos);
  EXPECT_LT(s.iterations, o.max_iterations);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c);
  EXPECT_NEAR(s.primal_objective, es.eigenvalues()[0], 1e-7);
}

TEST(SdpSolverTest, MixedBlocksAndOffset) {
  // max y + 10 s.t. [[1, y], [y, 1]] >= 0 and 0.5 - y >= 0.
  SdpInstance p;
  p.num_vars = 1;
  p.objective = Eigen::VectorXd::Ones(1);
  p.objective_offset = 10;
  p.dense.push_back(Block(2, Eigen::MatrixXd::Identity(2, 2)));
  Eigen::MatrixXd a(2, 2);
  a << 0, 1, 1, 0;
  SdpInstance::AppendCoefficient(p.dense[0], 0, a);
  DiagonalSdpBlock d;
  d.dim = 1;
  d.constant = Eigen::VectorXd::Constant(1, 0.5);
  d.entries = {{0, 0, -1}};
  p.diagonal.push_back(d);
  const SdpSolution s = SolveSdp(p);
  ASSERT_EQ(s.status, SdpStatus::kOptimal) << s.message;
  EXPECT_NEAR(s.primal_objective, 10.5, 1e-7);
  ASSERT_EQ(s.min_eigenvalues.size(), 2u);
  EXPECT_NEAR(s.min_eigenvalues[0], 0.5, 1e-6);
}

TEST(SdpSolverTest, NoVariables) {
  SdpInstance p;
  p.objective = Eigen::VectorXd(0);
  p.objective_offset = 3;
  p.dense.push_back(Block(2, Eigen::MatrixXd::Identity(2, 2)));
  const SdpSolution s = SolveSdp(p);
  ASSERT_EQ(s.status, SdpStatus::kOptimal) << s.message;
  EXPECT_NEAR(s.primal_objective, 3, 1e-9);
}

TEST(SdpSolverTest, InfeasibleIsNotOptimal) {
  // y >= 1 and y <= 0.
  SdpInstance p;
  p.num_vars = 1;
  p.objective = Eigen::VectorXd::Ones(1);
  DiagonalSdpBlock d;
  d.dim = 2;
  d.constant = Eigen::Vector2d(-1, 0);
  d.entries = {{0, 0, 1}, {0, 1, -1}};
  p.diagonal.push_back(d);
  SdpOptions o;
  o.max_iterations = 80;
  const SdpSolution s = SolveSdp(p, o);
  EXPECT_EQ(s.status, SdpStatus::kNumericalFailure);
  EXPECT_FALSE(s.message.empty());
}

TEST(SdpSolverTest, RandomInstancesCloseTheGap) {
  std::srand(7);
  for (int trial = 0; trial < 5; ++trial) {
    const int dim = 6, vars = 4;
    SdpInstance p;
    p.num_vars = vars;
    // A bounded instance: C = I + sum of random symmetric terms chosen so
    // that the feasible set is compact (first coefficient is -I).
    p.dense.push_back(Block(dim, 2 * Eigen::MatrixXd::Identity(dim, dim)));
    p.objective = Eigen::VectorXd::Random(vars);
    for (int i = 0; i < vars; ++i) {
      Eigen::MatrixXd a = Eigen::MatrixXd::Random(dim, dim);
      a = (0.5 * (a + a.transpose())).eval();
      SdpInstance::AppendCoefficient(p.dense[0], i, a);
    }
    DiagonalSdpBlock box;
    box.dim = 2 * vars;
    box.constant = Eigen::VectorXd::Ones(2 * vars);
    for (int i = 0; i < vars; ++i) {
      box.entries.push_back({i, 2 * i, 1});
      box.entries.push_back({i, 2 * i + 1, -1});
    }
    p.diagonal.push_back(box);
    SdpOptions o;
    o.verbose = std::getenv("SDP_VERBOSE") != nullptr;
    const SdpSolution s = SolveSdp(p, o);
    ASSERT_EQ(s.status, SdpStatus::kOptimal) << s.message;
    EXPECT_NEAR(s.primal_objective, s.dual_objective,
                1e-7 * std::max(1.0, std::abs(s.primal_objective)));
    for (double e : s.min_eigenvalues) EXPECT_GE(e, -1e-7);
  }
}

}  // namespace
}  // namespace permcode
