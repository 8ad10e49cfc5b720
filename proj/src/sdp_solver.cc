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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace permcode {

Eigen::MatrixXd DenseSdpBlock::Coefficient(int j) const {
  return Eigen::Map<const Eigen::MatrixXd>(coef.col(j).data(), dim, dim);
}

Eigen::MatrixXd DenseSdpBlock::Evaluate(const Eigen::VectorXd& y) const {
  Eigen::VectorXd sub(vars.size());
  for (size_t j = 0; j < vars.size(); ++j) sub[j] = y[vars[j]];
  Eigen::VectorXd v = coef * sub;
  return constant + Eigen::Map<const Eigen::MatrixXd>(v.data(), dim, dim);
}

Eigen::VectorXd DiagonalSdpBlock::Evaluate(const Eigen::VectorXd& y) const {
  Eigen::VectorXd v = constant;
  for (const Entry& e : entries) v[e.row] += e.value * y[e.var];
  return v;
}

void SdpInstance::AppendCoefficient(DenseSdpBlock& block, int var,
                                    const Eigen::MatrixXd& a) {
  const int d2 = block.dim * block.dim;
  block.vars.push_back(var);
  block.coef.conservativeResize(d2, static_cast<Eigen::Index>(block.vars.size()));
  block.coef.col(block.coef.cols() - 1) =
      Eigen::Map<const Eigen::VectorXd>(a.data(), d2);
}

const char* ToString(SdpStatus status) {
  switch (status) {
    case SdpStatus::kOptimal:
      return "optimal";
    case SdpStatus::kNearOptimal:
      return "near-optimal";
    case SdpStatus::kNumericalFailure:
      return "numerical-failure";
  }
  return "unknown";
}

namespace {

constexpr double kStepFraction = 0.95;
constexpr int kRefinementRounds = 2;
constexpr int kMaxBacktracks = 30;
constexpr double kMinStep = 1e-12;

double MinEigenvalue(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return std::numeric_limits<double>::infinity();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

// Largest alpha with X + alpha dX PSD, given X = L L^T.
double MaxStep(const Eigen::MatrixXd& l, const Eigen::MatrixXd& dx) {
  if (l.rows() == 0) return std::numeric_limits<double>::infinity();
  const auto tri = l.triangularView<Eigen::Lower>();
  const Eigen::MatrixXd t1 = tri.solve(dx);
  const Eigen::MatrixXd t = tri.solve(t1.transpose()).transpose();
  const double lambda = MinEigenvalue(0.5 * (t + t.transpose()));
  return lambda >= 0 ? std::numeric_limits<double>::infinity() : -1 / lambda;
}

double MaxStep(const Eigen::VectorXd& x, const Eigen::VectorXd& dx) {
  double alpha = std::numeric_limits<double>::infinity();
  for (Eigen::Index r = 0; r < x.size(); ++r) {
    if (dx[r] < 0) alpha = std::min(alpha, -x[r] / dx[r]);
  }
  return alpha;
}

Eigen::MatrixXd Sym(const Eigen::MatrixXd& m) {
  return 0.5 * (m + m.transpose());
}

class Solver {
 public:
  Solver(const SdpInstance& p, const SdpOptions& o) : p_(p), o_(o) {}

  SdpSolution Run();

 private:
  struct Direction {
    Eigen::VectorXd dy;
    std::vector<Eigen::MatrixXd> dX, dS;
    std::vector<Eigen::VectorXd> dx, ds;
  };

  Eigen::MatrixXd Combine(int b, const Eigen::VectorXd& y) const {
    const DenseSdpBlock& blk = p_.dense[b];
    Eigen::VectorXd sub(blk.vars.size());
    for (size_t j = 0; j < blk.vars.size(); ++j) sub[j] = y[blk.vars[j]];
    Eigen::VectorXd v = blk.coef * sub;
    return Eigen::Map<const Eigen::MatrixXd>(v.data(), blk.dim, blk.dim);
  }
  Eigen::VectorXd CombineDiag(int d, const Eigen::VectorXd& y) const {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(p_.diagonal[d].dim);
    for (const auto& e : p_.diagonal[d].entries) v[e.row] += e.value * y[e.var];
    return v;
  }
  // out_i += <A_i, T> over block b.
  void AddTraces(int b, const Eigen::MatrixXd& t, Eigen::VectorXd& out) const {
    const DenseSdpBlock& blk = p_.dense[b];
    const Eigen::Map<const Eigen::VectorXd> tv(t.data(), t.size());
    const Eigen::VectorXd tr = blk.coef.transpose() * tv;
    for (size_t j = 0; j < blk.vars.size(); ++j) out[blk.vars[j]] += tr[j];
  }
  void AddTracesDiag(int d, const Eigen::VectorXd& t, Eigen::VectorXd& out) const {
    for (const auto& e : p_.diagonal[d].entries) out[e.var] += e.value * t[e.row];
  }

  bool FactorSchur();
  Direction Solve(double sigma_mu, const Direction* predictor);

  const SdpInstance& p_;
  const SdpOptions& o_;
  Eigen::VectorXd y_;
  std::vector<Eigen::MatrixXd> X_, S_, Rd_, Sinv_, Lx_, Ls_;
  std::vector<Eigen::VectorXd> x_, s_, rd_;
  Eigen::MatrixXd schur_matrix_;
  Eigen::LLT<Eigen::MatrixXd> schur_;
};

bool Solver::FactorSchur() {
  const int v = p_.num_vars;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(v, v);
  for (size_t b = 0; b < p_.dense.size(); ++b) {
    const DenseSdpBlock& blk = p_.dense[b];
    const int dim = blk.dim;
    const int vb = static_cast<int>(blk.vars.size());
    if (vb == 0) continue;
    // W_j = vec(Ls^{-1} A_j Lx); M_b = W^T W.
    Eigen::MatrixXd w(dim * dim, vb);
    const auto ls = Ls_[b].triangularView<Eigen::Lower>();
    for (int j = 0; j < vb; ++j) {
      const Eigen::Map<const Eigen::MatrixXd> a(blk.coef.col(j).data(), dim,
                                                dim);
      Eigen::MatrixXd t = ls.solve(a * Lx_[b]);
      w.col(j) = Eigen::Map<const Eigen::VectorXd>(t.data(), dim * dim);
    }
    Eigen::MatrixXd mb = Eigen::MatrixXd::Zero(vb, vb);
    mb.selfadjointView<Eigen::Lower>().rankUpdate(w.transpose());
    mb = mb.selfadjointView<Eigen::Lower>();
    for (int i = 0; i < vb; ++i) {
      for (int j = 0; j < vb; ++j) m(blk.vars[i], blk.vars[j]) += mb(i, j);
    }
  }
  for (size_t d = 0; d < p_.diagonal.size(); ++d) {
    const DiagonalSdpBlock& blk = p_.diagonal[d];
    std::vector<std::vector<std::pair<int, double>>> by_row(blk.dim);
    for (const auto& e : blk.entries) by_row[e.row].push_back({e.var, e.value});
    for (int r = 0; r < blk.dim; ++r) {
      const double f = x_[d][r] / s_[d][r];
      for (const auto& [i, ai] : by_row[r]) {
        for (const auto& [j, aj] : by_row[r]) m(i, j) += f * ai * aj;
      }
    }
  }
  if (v == 0) return true;
  schur_matrix_ = m;
  schur_.compute(m);
  double ridge = 1e-14 * std::max(1.0, m.diagonal().cwiseAbs().maxCoeff());
  for (int attempt = 0; schur_.info() != Eigen::Success && attempt < 6;
       ++attempt) {
    schur_.compute(m + ridge * Eigen::MatrixXd::Identity(v, v));
    ridge *= 100;
  }
  return schur_.info() == Eigen::Success;
}

Solver::Direction Solver::Solve(double sigma_mu, const Direction* pred) {
  const int v = p_.num_vars;
  const size_t nb = p_.dense.size(), nd = p_.diagonal.size();
  std::vector<Eigen::MatrixXd> t(nb);
  std::vector<Eigen::VectorXd> td(nd);
  Eigen::VectorXd rhs = p_.objective;
  for (size_t b = 0; b < nb; ++b) {
    t[b] = sigma_mu * Sinv_[b] - X_[b] * Rd_[b] * Sinv_[b];
    if (pred) t[b] -= pred->dX[b] * pred->dS[b] * Sinv_[b];
    AddTraces(static_cast<int>(b), t[b], rhs);
  }
  for (size_t d = 0; d < nd; ++d) {
    td[d] = (sigma_mu - x_[d].array() * rd_[d].array()) / s_[d].array();
    if (pred) {
      td[d].array() -= pred->dx[d].array() * pred->ds[d].array() / s_[d].array();
    }
    AddTracesDiag(static_cast<int>(d), td[d], rhs);
  }
  Direction dir;
  dir.dy = Eigen::VectorXd::Zero(v);
  if (v > 0) {
    dir.dy = schur_.solve(rhs);
    for (int round = 0; round < kRefinementRounds; ++round) {
      dir.dy += schur_.solve(rhs - schur_matrix_ * dir.dy);
    }
  }
  for (size_t b = 0; b < nb; ++b) {
    const Eigen::MatrixXd ady = Combine(static_cast<int>(b), dir.dy);
    dir.dS.push_back(ady + Rd_[b]);
    dir.dX.push_back(Sym(t[b] - X_[b] - X_[b] * ady * Sinv_[b]));
  }
  for (size_t d = 0; d < nd; ++d) {
    const Eigen::VectorXd ady = CombineDiag(static_cast<int>(d), dir.dy);
    dir.ds.push_back(ady + rd_[d]);
    dir.dx.push_back(td[d].array() - x_[d].array() -
                     x_[d].array() * ady.array() / s_[d].array());
  }
  return dir;
}

SdpSolution Solver::Run() {
  SdpSolution sol;
  const int v = p_.num_vars;
  const size_t nb = p_.dense.size(), nd = p_.diagonal.size();
  y_ = Eigen::VectorXd::Zero(v);
  double c_norm = p_.objective.norm();
  double max_a = 0, max_c = 0;
  for (const auto& blk : p_.dense) {
    max_c = std::max(max_c, blk.constant.norm());
    for (int j = 0; j < blk.coef.cols(); ++j) {
      max_a = std::max(max_a, blk.coef.col(j).norm());
    }
  }
  for (const auto& blk : p_.diagonal) {
    max_c = std::max(max_c, blk.constant.norm());
    for (const auto& e : blk.entries) max_a = std::max(max_a, std::abs(e.value));
  }
  double max_ratio = 0;
  for (int i = 0; i < v; ++i) {
    max_ratio = std::max(max_ratio, (1 + std::abs(p_.objective[i])) / (1 + max_a));
  }
  int total_dim = 0;
  for (const auto& blk : p_.dense) total_dim += blk.dim;
  for (const auto& blk : p_.diagonal) total_dim += blk.dim;
  const double x0 = std::max({10.0, std::sqrt(total_dim), total_dim * max_ratio});
  const double s0 = std::max({10.0, std::sqrt(total_dim), max_c, max_a});
  for (const auto& blk : p_.dense) {
    X_.push_back(x0 * Eigen::MatrixXd::Identity(blk.dim, blk.dim));
    S_.push_back(s0 * Eigen::MatrixXd::Identity(blk.dim, blk.dim));
  }
  for (const auto& blk : p_.diagonal) {
    x_.push_back(Eigen::VectorXd::Constant(blk.dim, x0));
    s_.push_back(Eigen::VectorXd::Constant(blk.dim, s0));
  }
  Rd_.resize(nb);
  Sinv_.resize(nb);
  Lx_.resize(nb);
  Ls_.resize(nb);
  rd_.resize(nd);
  double c_const = 0;
  for (const auto& blk : p_.dense) c_const = std::max(c_const, blk.constant.norm());
  for (const auto& blk : p_.diagonal) c_const = std::max(c_const, blk.constant.norm());

  SdpSolution best;
  double best_worst = std::numeric_limits<double>::infinity();
  int best_iteration = 0;
  for (int it = 0;; ++it) {
    // Residuals and objectives.
    Eigen::VectorXd ax = Eigen::VectorXd::Zero(v);
    double dobj = p_.objective_offset, gap = 0, rd_norm = 0;
    for (size_t b = 0; b < nb; ++b) {
      AddTraces(static_cast<int>(b), X_[b], ax);
      Rd_[b] = p_.dense[b].constant + Combine(static_cast<int>(b), y_) - S_[b];
      rd_norm = std::max(rd_norm, Rd_[b].norm());
      dobj += p_.dense[b].constant.cwiseProduct(X_[b]).sum();
      gap += X_[b].cwiseProduct(S_[b]).sum();
    }
    for (size_t d = 0; d < nd; ++d) {
      AddTracesDiag(static_cast<int>(d), x_[d], ax);
      rd_[d] = p_.diagonal[d].constant + CombineDiag(static_cast<int>(d), y_) -
               s_[d];
      rd_norm = std::max(rd_norm, rd_[d].norm());
      dobj += p_.diagonal[d].constant.dot(x_[d]);
      gap += x_[d].dot(s_[d]);
    }
    const double pobj = p_.objective.dot(y_) + p_.objective_offset;
    const Eigen::VectorXd rp = -p_.objective - ax;
    sol.primal_objective = pobj;
    sol.dual_objective = dobj;
    sol.relative_gap = std::abs(dobj - pobj) / std::max(1.0, std::abs(pobj));
    sol.primal_infeasibility = rd_norm / (1 + c_const);
    sol.dual_infeasibility = rp.norm() / (1 + c_norm);
    sol.iterations = it;
    const double comp = gap / std::max(1.0, std::abs(pobj));
    if (o_.verbose) {
      std::fprintf(stderr,
                   "it %3d  pobj %.10e  dobj %.10e  gap %.2e  pinf %.2e  "
                   "dinf %.2e\n",
                   it, pobj, dobj, sol.relative_gap, sol.primal_infeasibility,
                   sol.dual_infeasibility);
    }
    const double worst =
        std::max({sol.relative_gap, comp, sol.primal_infeasibility,
                  sol.dual_infeasibility});
    if (worst <= o_.tolerance) {
      sol.status = SdpStatus::kOptimal;
      break;
    }
    if (worst < 0.9 * best_worst) {
      best_worst = worst;
      best_iteration = it;
      best = sol;
      best.y = y_;
    } else if (it - best_iteration >= o_.stall_iterations) {
      sol.message = "no progress";
      break;
    }
    if (it >= o_.max_iterations) {
      sol.message = "iteration limit reached";
      break;
    }
    const double mu = gap / total_dim;
    // Factorizations.
    bool ok = true;
    for (size_t b = 0; b < nb && ok; ++b) {
      Eigen::LLT<Eigen::MatrixXd> lx(X_[b]), ls(S_[b]);
      ok = lx.info() == Eigen::Success && ls.info() == Eigen::Success;
      if (!ok) break;
      Lx_[b] = lx.matrixL();
      Ls_[b] = ls.matrixL();
      Sinv_[b] = ls.solve(Eigen::MatrixXd::Identity(p_.dense[b].dim,
                                                    p_.dense[b].dim));
    }
    if (!ok || !FactorSchur()) {
      sol.message = "factorization failed";
      break;
    }
    // Predictor.
    const Direction pred = Solve(0.0, nullptr);
    double ap = std::numeric_limits<double>::infinity(), ad = ap;
    for (size_t b = 0; b < nb; ++b) {
      ap = std::min(ap, MaxStep(Lx_[b], pred.dX[b]));
      ad = std::min(ad, MaxStep(Ls_[b], pred.dS[b]));
    }
    for (size_t d = 0; d < nd; ++d) {
      ap = std::min(ap, MaxStep(x_[d], pred.dx[d]));
      ad = std::min(ad, MaxStep(s_[d], pred.ds[d]));
    }
    ap = std::min(1.0, ap);
    ad = std::min(1.0, ad);
    double gap_aff = 0;
    for (size_t b = 0; b < nb; ++b) {
      gap_aff += (X_[b] + ap * pred.dX[b]).cwiseProduct(S_[b] + ad * pred.dS[b]).sum();
    }
    for (size_t d = 0; d < nd; ++d) {
      gap_aff += (x_[d] + ap * pred.dx[d]).dot(s_[d] + ad * pred.ds[d]);
    }
    const double sigma =
        std::clamp(std::pow(std::max(gap_aff, 0.0) / gap, 3), 0.0, 1.0);
    // Corrector.
    const Direction dir = Solve(sigma * mu, &pred);
    ap = ad = std::numeric_limits<double>::infinity();
    for (size_t b = 0; b < nb; ++b) {
      ap = std::min(ap, MaxStep(Lx_[b], dir.dX[b]));
      ad = std::min(ad, MaxStep(Ls_[b], dir.dS[b]));
    }
    for (size_t d = 0; d < nd; ++d) {
      ap = std::min(ap, MaxStep(x_[d], dir.dx[d]));
      ad = std::min(ad, MaxStep(s_[d], dir.ds[d]));
    }
    ap = std::min(1.0, kStepFraction * ap);
    ad = std::min(1.0, kStepFraction * ad);
    if (ap < kMinStep && ad < kMinStep) {
      sol.message = "step length collapsed";
      break;
    }
    // Roundoff near the boundary can leave the step just outside the cone;
    // shorten it until the new iterates factor.
    std::vector<Eigen::MatrixXd> x_next(nb), s_next(nb);
    for (int tries = 0;; ++tries) {
      bool x_ok = true, s_ok = true;
      for (size_t b = 0; b < nb; ++b) {
        x_next[b] = Sym(X_[b] + ap * dir.dX[b]);
        s_next[b] = Sym(S_[b] + ad * dir.dS[b]);
        x_ok = x_ok && Eigen::LLT<Eigen::MatrixXd>(x_next[b]).info() ==
                           Eigen::Success;
        s_ok = s_ok && Eigen::LLT<Eigen::MatrixXd>(s_next[b]).info() ==
                           Eigen::Success;
      }
      if ((x_ok && s_ok) || tries == kMaxBacktracks) break;
      if (!x_ok) ap *= 0.5;
      if (!s_ok) ad *= 0.5;
    }
    X_ = std::move(x_next);
    S_ = std::move(s_next);
    for (size_t d = 0; d < nd; ++d) {
      x_[d] += ap * dir.dx[d];
      s_[d] += ad * dir.ds[d];
    }
    y_ += ad * dir.dy;
  }
  if (sol.status != SdpStatus::kOptimal &&
      best_worst <= o_.relaxed_tolerance) {
    const std::string reason = sol.message;
    const int iterations = sol.iterations;
    sol = best;
    sol.iterations = iterations;
    y_ = best.y;
    sol.status = SdpStatus::kNearOptimal;
    sol.message = "reduced accuracy: " + reason;
  }
  sol.y = y_;
  for (const auto& blk : p_.dense) {
    sol.min_eigenvalues.push_back(MinEigenvalue(blk.Evaluate(y_)));
  }
  for (const auto& blk : p_.diagonal) {
    const Eigen::VectorXd e = blk.Evaluate(y_);
    sol.min_eigenvalues.push_back(
        e.size() ? e.minCoeff() : std::numeric_limits<double>::infinity());
  }
  return sol;
}

}  // namespace

SdpSolution SolveSdp(const SdpInstance& instance, const SdpOptions& options) {
  return Solver(instance, options).Run();
}

}  // namespace permcode
