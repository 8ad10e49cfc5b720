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

#include "permcode/cli.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/version.hpp>

#include "CLI11.hpp"
#include "Eigen/Core"
#include "json.hpp"
#include "permcode/block_diag.h"
#include "permcode/centralizer_algebra.h"
#include "permcode/character_table.h"
#include "permcode/conjugacy_scheme.h"
#include "permcode/delsarte_lp.h"
#include "permcode/errors.h"
#include "permcode/expected_tables.h"
#include "permcode/pair_orbits.h"
#include "permcode/partition.h"
#include "permcode/sdp_bound.h"
#include "permcode/symmetric_group.h"

namespace permcode {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct GlobalOptions {
  bool json = false;
  std::string csv;
  uint64_t seed = kDefaultSeed;
  int jobs = 1;
  bool allow_slow = false;
};

struct Context {
  GlobalOptions global;
  std::vector<std::string> argv;
  std::ostream& out;
  std::ostream& err;
  Clock::time_point start = Clock::now();
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

Json Versions() {
  std::ostringstream eigen, boost;
  eigen << EIGEN_WORLD_VERSION << '.' << EIGEN_MAJOR_VERSION << '.'
        << EIGEN_MINOR_VERSION;
  boost << BOOST_VERSION / 100000 << '.' << BOOST_VERSION / 100 % 1000 << '.'
        << BOOST_VERSION % 100;
  return Json{{"permcode", kVersion},
              {"eigen", eigen.str()},
              {"boost", boost.str()},
              {"compiler", __VERSION__}};
}

Json NewReport(const Context& ctx, const std::string& subcommand, int n) {
  return Json{{"schema", kReportSchema},
              {"command", ctx.argv},
              {"subcommand", subcommand},
              {"n", n},
              {"seed", ctx.global.seed}};
}

void Emit(Context& ctx, Json report) {
  if (!ctx.global.json) return;
  report["wall_time_s"] = Seconds(ctx.start);
  report["versions"] = Versions();
  ctx.out << report.dump(2) << '\n';
}

std::string FormatSet(const std::vector<int>& d) {
  std::string s = "{";
  for (size_t i = 0; i < d.size(); ++i) {
    s += (i ? "," : "") + std::to_string(d[i]);
  }
  return s + "}";
}

// Accepts "5,6", "{5,6}", "" and "{}".
std::vector<int> ParseDistanceList(const std::string& text) {
  std::vector<int> d;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(),
                               [](char c) {
                                 return c == '{' || c == '}' || c == ' ';
                               }),
                token.end());
    if (token.empty()) continue;
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw UsageError("--dset: '" + token + "' is not an integer");
    }
    d.push_back(v);
  }
  return d;
}

struct DistanceArgs {
  std::optional<int> dmin;
  std::optional<std::string> dset;
};

void AddDistanceOptions(CLI::App* cmd, DistanceArgs& args) {
  auto* dmin = cmd->add_option("--dmin", args.dmin,
                               "Minimum distance d; D = {d, ..., n}");
  auto* dset = cmd->add_option("--dset", args.dset,
                               "Distance set, comma separated (\"\" for {})");
  dmin->excludes(dset);
}

std::vector<int> ResolveDistances(int n, const DistanceArgs& args) {
  if (args.dmin.has_value() == args.dset.has_value()) {
    throw UsageError("exactly one of --dmin and --dset is required");
  }
  if (args.dmin) {
    if (*args.dmin < 2 || *args.dmin > n + 1) {
      throw UsageError("--dmin must lie in [2, n + 1]");
    }
    return DistancesFrom(n, *args.dmin);
  }
  return ValidateDistances(n, ParseDistanceList(*args.dset));
}

void CheckDegree(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw UsageError(std::string(what) + ": --n must lie in [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

// Runs fn(0), ..., fn(count - 1) on up to `jobs` threads; rethrows the first
// exception.
void ParallelFor(int jobs, int count, const std::function<void(int)>& fn) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (int i; (i = next++) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

Json IntMatrix(int rows, int cols, const std::function<int64_t(int, int)>& f) {
  Json m = Json::array();
  for (int i = 0; i < rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < cols; ++j) row.push_back(f(i, j));
    m.push_back(row);
  }
  return m;
}

void PrintIntTable(std::ostream& out, const std::vector<std::string>& row_labels,
                   const std::vector<std::string>& col_labels,
                   const std::function<int64_t(int, int)>& f) {
  size_t label_width = 0;
  for (const auto& l : row_labels) label_width = std::max(label_width, l.size());
  std::vector<size_t> width(col_labels.size());
  for (size_t j = 0; j < col_labels.size(); ++j) {
    width[j] = col_labels[j].size();
    for (size_t i = 0; i < row_labels.size(); ++i) {
      width[j] = std::max(width[j], std::to_string(f(i, j)).size());
    }
  }
  out << std::setw(label_width) << "";
  for (size_t j = 0; j < col_labels.size(); ++j) {
    out << "  " << std::setw(width[j]) << col_labels[j];
  }
  out << '\n';
  for (size_t i = 0; i < row_labels.size(); ++i) {
    out << std::setw(label_width) << std::left << row_labels[i] << std::right;
    for (size_t j = 0; j < col_labels.size(); ++j) {
      out << "  " << std::setw(width[j]) << f(i, j);
    }
    out << '\n';
  }
}

std::vector<std::string> PartitionLabels(const std::vector<Partition>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back("[" + p.ToString() + "]");
  return out;
}

// --- chars -----------------------------------------------------------------

int RunChars(Context& ctx, int n) {
  CheckDegree(n, 1, kMaxDegree, "chars");
  const CharacterTable table(n);
  const int m = table.size();
  if (ctx.global.json) {
    Json report = NewReport(ctx, "chars", n);
    Json classes = Json::array(), characters = Json::array();
    for (int c = 0; c < m; ++c) {
      classes.push_back({{"cycle_type", table.classes()[c].parts()},
                         {"size", table.class_size(c)},
                         {"centralizer", table.centralizer_size(c)},
                         {"weight", HammingWeight(table.classes()[c])}});
    }
    for (int k = 0; k < m; ++k) {
      characters.push_back({{"partition", table.characters()[k].parts()},
                            {"degree", table.degree(k)}});
    }
    report["result"] = {
        {"classes", classes},
        {"characters", characters},
        {"values", IntMatrix(m, m, [&](int k, int c) {
           return table.value(k, c);
         })}};
    Emit(ctx, std::move(report));
    return kExitOk;
  }
  ctx.out << "Character table of Sym(" << n << "): rows are characters, "
          << "columns are classes\n";
  PrintIntTable(ctx.out, PartitionLabels(table.characters()),
                PartitionLabels(table.classes()),
                [&](int k, int c) { return table.value(k, c); });
  ctx.out << '\n';
  PrintIntTable(ctx.out, {"class size", "centralizer"},
                PartitionLabels(table.classes()), [&](int r, int c) {
                  return r == 0 ? table.class_size(c)
                                : table.centralizer_size(c);
                });
  return kExitOk;
}

// --- scheme ----------------------------------------------------------------

int RunScheme(Context& ctx, int n, bool tensor) {
  CheckDegree(n, 1, kMaxDegree, "scheme");
  const ConjugacyScheme scheme{CharacterTable(n)};
  const int m = scheme.size();
  const CharacterTable& table = scheme.table();
  if (ctx.global.json) {
    Json report = NewReport(ctx, "scheme", n);
    Json weights = Json::array();
    for (int c = 0; c < m; ++c) weights.push_back(scheme.weight(c));
    report["result"] = {
        {"classes", PartitionLabels(table.classes())},
        {"characters", PartitionLabels(table.characters())},
        {"weights", weights},
        {"Q", IntMatrix(m, m, [&](int c, int k) {
           return scheme.second_eigenmatrix(c, k);
         })}};
    if (tensor) {
      Json p = Json::array();
      for (int i = 0; i < m; ++i) {
        p.push_back(IntMatrix(m, m, [&](int j, int k) {
          return scheme.structure_constant(i, j, k);
        }));
      }
      report["result"]["p"] = p;
    }
    Emit(ctx, std::move(report));
    return kExitOk;
  }
  ctx.out << "Conjugacy scheme of Sym(" << n << "), " << m << " classes\n\n"
          << "Class weights d_H(id, phi_i):\n";
  PrintIntTable(ctx.out, {"weight"}, PartitionLabels(table.classes()),
                [&](int, int c) { return scheme.weight(c); });
  ctx.out << "\nSecond eigenmatrix Q (rows classes, columns characters):\n";
  PrintIntTable(ctx.out, PartitionLabels(table.classes()),
                PartitionLabels(table.characters()),
                [&](int c, int k) { return scheme.second_eigenmatrix(c, k); });
  if (tensor) {
    for (int i = 0; i < m; ++i) {
      ctx.out << "\np_{" << i << ",j}^k (rows j, columns k):\n";
      std::vector<std::string> labels;
      for (int j = 0; j < m; ++j) labels.push_back(std::to_string(j));
      PrintIntTable(ctx.out, labels, labels, [&](int j, int k) {
        return scheme.structure_constant(i, j, k);
      });
    }
  }
  return kExitOk;
}

// --- lp --------------------------------------------------------------------

int RunLp(Context& ctx, int n, const DistanceArgs& dargs) {
  CheckDegree(n, 2, kMaxDegree, "lp");
  const std::vector<int> d = ResolveDistances(n, dargs);
  const CharacterTable table(n);
  const LpBoundResult r = SolveLp(BuildLp(table, d), table);
  const int64_t product = TrivialProductBound(d);
  if (ctx.global.json) {
    Json report = NewReport(ctx, "lp", n);
    Json inner = Json::array(), cert = Json::array();
    for (const auto& a : r.inner_distribution) inner.push_back(ToString(a));
    for (const auto& y : r.certificate) cert.push_back(ToString(y));
    report["distances"] = d;
    report["bound_kind"] = "lp";
    report["status"] = ToString(r.status);
    report["raw"] = ToString(r.raw_optimum);
    report["raw_value"] = ToDouble(r.raw_optimum);
    report["floored_bound"] = r.floored_bound;
    report["product_bound"] = product;
    report["diagnostics"] = {{"dual_optimum", ToString(r.dual_optimum)},
                             {"pivots", r.pivots},
                             {"inner_distribution", inner},
                             {"certificate", cert}};
    Emit(ctx, std::move(report));
  } else {
    ctx.out << "n = " << n << ", D = " << FormatSet(d) << '\n'
            << "M_LP raw " << ToString(r.raw_optimum) << " (= "
            << std::setprecision(10) << ToDouble(r.raw_optimum)
            << "), floored " << r.floored_bound << '\n'
            << "status " << ToString(r.status) << ", dual optimum "
            << ToString(r.dual_optimum) << ", " << r.pivots << " pivots\n"
            << "product of D " << product << '\n';
  }
  return r.status == BoundStatus::kNumericalFailure ? kExitSolverFailure
                                                    : kExitOk;
}

// --- orbits ----------------------------------------------------------------

int RunOrbits(Context& ctx, int n, bool enumerate, bool swap,
              const std::string& save) {
  CheckDegree(n, 2, kMaxDegree, "orbits");
  const CharacterTable table(n);
  const int64_t b = BurnsideCount(table);
  const int64_t b_swap = BurnsideCountWithSwap(table);
  Json result = {{"b", b}, {"b_swap", b_swap}};
  std::ostringstream text;
  text << "n = " << n << "\nb_n  = " << b << "  (orbits of Sym(n)^2 under "
       << "conjugation and inversion)\nb_n* = " << b_swap
       << "  (also allowing coordinate swap)\n";
  if (enumerate || !save.empty()) {
    const auto t0 = Clock::now();
    const auto index = OrbitIndex::Enumerate(n);
    const double seconds = Seconds(t0);
    std::map<int64_t, int> histogram;
    std::map<std::pair<int, int>, int> per_block;
    for (int l = 1; l <= index->num_orbits(); ++l) {
      const OrbitInfo& info = index->info(l);
      ++histogram[info.size];
      ++per_block[{info.row_class, info.col_class}];
    }
    Json hist = Json::array(), blocks = Json::array();
    for (const auto& [size, count] : histogram) {
      hist.push_back({{"size", size}, {"orbits", count}});
    }
    for (const auto& [rc, count] : per_block) {
      blocks.push_back({{"row_class", table.classes()[rc.first].parts()},
                        {"col_class", table.classes()[rc.second].parts()},
                        {"orbits", count}});
    }
    Json e = {{"orbits", index->num_orbits()},
              {"matches_formula", index->num_orbits() == b},
              {"size_histogram", hist},
              {"blocks", blocks},
              {"seconds", seconds}};
    text << "enumerated " << index->num_orbits() << " orbits in "
         << std::fixed << std::setprecision(2) << seconds << " s ("
         << (index->num_orbits() == b ? "matches" : "DOES NOT MATCH")
         << " b_n)\n";
    if (swap) {
      e["transpose_classes"] = index->NumTransposeClasses();
      text << "transpose classes " << index->NumTransposeClasses() << " ("
           << (index->NumTransposeClasses() == b_swap ? "matches"
                                                      : "DOES NOT MATCH")
           << " b_n*)\n";
    }
    text << "orbit sizes:";
    for (const auto& [size, count] : histogram) {
      text << ' ' << size << "x" << count;
    }
    text << '\n';
    if (!save.empty()) {
      index->Save(save);
      e["saved"] = save;
      text << "saved orbit ids to " << save << '\n';
    }
    result["enumeration"] = e;
  }
  if (ctx.global.json) {
    Json report = NewReport(ctx, "orbits", n);
    report["result"] = result;
    Emit(ctx, std::move(report));
  } else {
    ctx.out << text.str();
  }
  return kExitOk;
}

// --- algebra ---------------------------------------------------------------

int RunAlgebra(Context& ctx, int n, bool multiplicities, bool terwilliger,
               bool dense) {
  CheckDegree(n, 2, SymmetricGroup::kMaxTabulatedDegree, "algebra");
  if (!multiplicities && !terwilliger) multiplicities = true;
  const auto group = std::make_shared<const SymmetricGroup>(n);
  const CharacterTable& table = group->table();
  Json result;
  std::ostringstream text;
  int code = kExitOk;
  if (multiplicities) {
    const MultiplicityTable mt = Multiplicities(*group);
    Json rows = Json::array();
    int64_t sum_sq = 0, sum_md = 0;
    for (size_t k = 0; k < mt.multiplicity.size(); ++k) {
      const int64_t m = mt.multiplicity[k];
      sum_sq += m * m;
      sum_md += m * mt.degree[k];
      if (m == 0) continue;
      rows.push_back(
          {{"k", k},
           {"partition",
            table.characters()[GroupCharacterPartition(k)].parts()},
           {"sign", GroupCharacterSign(k)},
           {"degree", mt.degree[k]},
           {"multiplicity", m},
           {"per_class", mt.coefficient[k]}});
    }
    const int64_t b = BurnsideCount(table);
    result["multiplicities"] = {{"blocks", rows},
                                {"nonzero", mt.NonzeroMultiplicities()},
                                {"sum_m_squared", sum_sq},
                                {"b", b},
                                {"sum_m_degree", sum_md},
                                {"order", group->order()}};
    text << "n = " << n << ": nonzero multiplicities m_k:";
    for (int64_t m : mt.NonzeroMultiplicities()) text << ' ' << m;
    text << "\nsum m_k^2 = " << sum_sq << " (b_n = " << b
         << "), sum m_k d_k = " << sum_md << " (n! = " << group->order()
         << ")\n";
  }
  if (terwilliger) {
    if (n >= 7 || (n == 6 && !ctx.global.allow_slow)) {
      throw CapacityError("Terwilliger dimension at n = " + std::to_string(n) +
                          (n == 6 ? " needs --allow-slow" : " is not supported"));
    }
    if (dense && n > 5) throw UsageError("--dense needs n <= 5");
    const auto t0 = Clock::now();
    const TerwilligerResult tw =
        dense ? TerwilligerDimensionDense(*group)
              : TerwilligerDimensionOrbit(*OrbitIndex::Enumerate(group));
    const int64_t b = BurnsideCount(table);
    result["terwilliger"] = {{"dimension", tw.dimension},
                             {"b", b},
                             {"equal", tw.dimension == b},
                             {"mode", dense ? "dense" : "orbit"},
                             {"smallest_accepted", tw.smallest_accepted},
                             {"largest_rejected", tw.largest_rejected},
                             {"seconds", Seconds(t0)}};
    text << "dim <A_i, E'_i> = " << tw.dimension << " (b_n = " << b << ", "
         << (tw.dimension == b ? "equal" : "NOT equal") << "; rank gap "
         << tw.smallest_accepted << " accepted vs " << tw.largest_rejected
         << " rejected)\n";
    if (tw.dimension != b) code = kExitMismatch;
  }
  if (ctx.global.json) {
    Json report = NewReport(ctx, "algebra", n);
    report["result"] = result;
    Emit(ctx, std::move(report));
  } else {
    ctx.out << text.str();
  }
  return code;
}

// --- blocks ----------------------------------------------------------------

int RunBlocks(Context& ctx, int n, const std::string& save) {
  CheckDegree(n, 2, OrbitIndex::kMaxEnumerationDegree, "blocks");
  const auto t0 = Clock::now();
  const auto index = OrbitIndex::Enumerate(n);
  const BasicBlockSet set = BasicBlockSet::Compute(index, ctx.global.seed);
  const double seconds = Seconds(t0);
  const CharacterTable& table = index->group().table();
  Json blocks = Json::array();
  std::ostringstream text;
  text << "n = " << n << ": " << set.num_blocks() << " blocks, "
       << index->num_orbits() << " orbits, " << std::fixed
       << std::setprecision(2) << seconds << " s\n";
  int64_t sum_sq = 0;
  for (int b = 0; b < set.num_blocks(); ++b) {
    const auto& blk = set.block(b);
    sum_sq += static_cast<int64_t>(blk.m) * blk.m;
    const Partition& shape = table.characters()[GroupCharacterPartition(blk.k)];
    blocks.push_back({{"k", blk.k},
                      {"partition", shape.parts()},
                      {"sign", GroupCharacterSign(blk.k)},
                      {"m", blk.m},
                      {"degree", blk.degree},
                      {"per_class", blk.class_dim}});
    text << "  k=" << std::setw(2) << blk.k << "  [" << shape.ToString()
         << "]" << (GroupCharacterSign(blk.k) < 0 ? "-" : "+") << "  m_k="
         << std::setw(2) << blk.m << "  d_k=" << blk.degree << '\n';
  }
  text << "sum m_k^2 = " << sum_sq << '\n';
  Json result = {{"blocks", blocks},
                 {"sum_m_squared", sum_sq},
                 {"orbits", index->num_orbits()},
                 {"seconds", seconds}};
  if (!save.empty()) {
    set.Save(save);
    result["saved"] = save;
    text << "saved basic blocks to " << save << '\n';
  }
  if (ctx.global.json) {
    Json report = NewReport(ctx, "blocks", n);
    report["result"] = result;
    Emit(ctx, std::move(report));
  } else {
    ctx.out << text.str();
  }
  return kExitOk;
}

// --- sdp -------------------------------------------------------------------

struct SdpPipeline {
  std::shared_ptr<const OrbitIndex> index;
  std::unique_ptr<BasicBlockSet> blocks;
  double setup_seconds = 0;
};

SdpPipeline PrepareSdp(int n, SdpMode mode, uint64_t seed, bool allow_slow) {
  if (mode == SdpMode::kFull && n > 5 + (allow_slow ? 1 : 0)) {
    throw CapacityError("full-mode SDP at n = " + std::to_string(n) +
                        (n == 6 ? " needs --allow-slow" : " is not supported"));
  }
  const auto t0 = Clock::now();
  SdpPipeline p;
  p.index = OrbitIndex::Enumerate(n);
  if (mode == SdpMode::kBlock) {
    p.blocks = std::make_unique<BasicBlockSet>(
        BasicBlockSet::Compute(p.index, seed));
  }
  p.setup_seconds = Seconds(t0);
  return p;
}

SdpProblem Assemble(const SdpPipeline& p, const std::vector<int>& d,
                    bool allow_slow) {
  SdpAssembleOptions options;
  options.allow_slow = allow_slow;
  return p.blocks ? AssembleSdp(*p.blocks, d, options)
                  : AssembleSdp(*p.index, d, options);
}

Json SdpDiagnostics(const SdpProblem& problem, const SdpBoundResult& r) {
  Json eig = Json::array();
  for (const auto& [label, value] : r.min_eigenvalues) {
    eig.push_back({{"block", label}, {"value", value}});
  }
  return {{"mode", ToString(problem.mode)},
          {"variables", r.num_variables},
          {"forced_zero_orbits", problem.forced_zero.size()},
          {"psd_blocks", problem.instance.dense.size()},
          {"dropped_blocks", problem.dropped_blocks},
          {"iterations", r.iterations},
          {"dual_objective", r.dual_objective},
          {"relative_gap", r.relative_gap},
          {"primal_infeasibility", r.primal_infeasibility},
          {"dual_infeasibility", r.dual_infeasibility},
          {"min_eigenvalues", eig},
          {"message", r.message}};
}

int RunSdp(Context& ctx, int n, const DistanceArgs& dargs,
           const std::string& mode_name, const std::string& export_path,
           int max_iterations) {
  CheckDegree(n, 2, OrbitIndex::kMaxEnumerationDegree, "sdp");
  const std::vector<int> d = ResolveDistances(n, dargs);
  const SdpMode mode = mode_name == "full" ? SdpMode::kFull : SdpMode::kBlock;
  const SdpPipeline pipeline =
      PrepareSdp(n, mode, ctx.global.seed, ctx.global.allow_slow);
  const SdpProblem problem = Assemble(pipeline, d, ctx.global.allow_slow);
  if (!export_path.empty()) ExportSdpa(problem, export_path);
  const auto t0 = Clock::now();
  SdpOptions solver;
  solver.max_iterations = max_iterations;
  const SdpBoundResult r = SolveSdpBound(problem, solver);
  const double solve_seconds = Seconds(t0);
  const bool ok = Converged(r.status);
  if (ctx.global.json) {
    Json report = NewReport(ctx, "sdp", n);
    report["distances"] = d;
    report["bound_kind"] = "sdp";
    report["status"] = ToString(r.status);
    report["raw"] = r.raw_optimum;
    report["floored_bound"] = r.floored_bound;
    report["product_bound"] = TrivialProductBound(d);
    Json diag = SdpDiagnostics(problem, r);
    diag["setup_seconds"] = pipeline.setup_seconds;
    diag["solve_seconds"] = solve_seconds;
    if (!export_path.empty()) diag["exported"] = export_path;
    report["diagnostics"] = diag;
    Emit(ctx, std::move(report));
  } else {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& e : r.min_eigenvalues) worst = std::min(worst, e.second);
    ctx.out << "n = " << n << ", D = " << FormatSet(d) << ", mode "
            << ToString(problem.mode) << '\n'
            << r.num_variables << " variables, "
            << problem.instance.dense.size() << " PSD blocks ("
            << problem.dropped_blocks << " constant blocks dropped)\n"
            << std::setprecision(10) << "M_SDP raw " << r.raw_optimum
            << " (dual " << r.dual_objective << "), floored "
            << r.floored_bound << '\n'
            << std::setprecision(3) << "status " << ToString(r.status) << ", "
            << r.iterations << " iterations, relative gap " << r.relative_gap
            << ", smallest eigenvalue " << worst << '\n';
    if (!r.message.empty()) ctx.out << "solver: " << r.message << '\n';
    if (!export_path.empty()) {
      ctx.out << "exported SDPA problem to " << export_path << '\n';
    }
  }
  if (!ok) {
    ctx.err << "permcode: SDP solver did not converge: " << r.message << '\n';
    return kExitSolverFailure;
  }
  return kExitOk;
}

// --- tables ----------------------------------------------------------------

// "k..l" or "k", 1-based and inclusive, clipped to [1, count].
std::pair<int, int> ParseRows(const std::string& text, int count) {
  if (text.empty()) return {0, count};
  int lo = 0, hi = 0;
  const size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw UsageError("--rows must be k or k..l");
  }
  if (lo < 1 || hi < lo || lo > count) {
    throw UsageError("--rows out of range: the table has " +
                     std::to_string(count) + " rows");
  }
  return {lo - 1, std::min(hi, count)};
}

struct TableOutcome {
  std::vector<std::string> csv;
  Json rows = Json::array();
  std::vector<std::string> mismatches;
  std::vector<std::string> errata;
  bool solver_failure = false;
};

void Compare(TableOutcome& t, const std::string& where, const char* column,
             int64_t expected, int64_t got) {
  if (expected != got) {
    t.mismatches.push_back(where + " " + column + ": expected " +
                           std::to_string(expected) + ", got " +
                           std::to_string(got));
  }
}

TableOutcome Table1(std::pair<int, int> range) {
  const auto& rows = GetExpectedTables().table1;
  TableOutcome t;
  t.csv.push_back("n,n!,b_n,b_n*,enumerated");
  for (int i = range.first; i < range.second; ++i) {
    const OrbitCountRow& row = rows[i];
    const CharacterTable table(row.n);
    const int64_t b = BurnsideCount(table);
    const int64_t bs = BurnsideCountWithSwap(table);
    std::optional<int64_t> enumerated;
    if (row.n <= OrbitIndex::kMaxEnumerationDegree) {
      enumerated = OrbitIndex::Enumerate(row.n)->num_orbits();
    }
    const std::string where = "n=" + std::to_string(row.n);
    Compare(t, where, "b_n", row.b, b);
    Compare(t, where, "b_n*", row.b_swap, bs);
    if (enumerated) Compare(t, where, "enumerated b_n", row.b, *enumerated);
    int64_t order = 1;
    for (int k = 2; k <= row.n; ++k) order *= k;
    t.csv.push_back(std::to_string(row.n) + "," + std::to_string(order) + "," +
                    std::to_string(b) + "," + std::to_string(bs) + "," +
                    (enumerated ? std::to_string(*enumerated) : ""));
    Json r = {{"n", row.n}, {"order", order}, {"b", b}, {"b_swap", bs}};
    r["enumerated"] = enumerated ? Json(*enumerated) : Json(nullptr);
    t.rows.push_back(r);
  }
  return t;
}

TableOutcome Table3(std::pair<int, int> range) {
  const auto& rows = GetExpectedTables().table3;
  TableOutcome t;
  t.csv.push_back("n,m_k");
  for (int i = range.first; i < range.second; ++i) {
    const MultiplicityRow& row = rows[i];
    const SymmetricGroup group(row.n);
    const std::vector<int64_t> m = Multiplicities(group).NonzeroMultiplicities();
    std::vector<int> got(m.begin(), m.end());
    std::string joined;
    for (size_t j = 0; j < got.size(); ++j) {
      joined += (j ? " " : "") + std::to_string(got[j]);
    }
    if (got != row.m) {
      t.mismatches.push_back("n=" + std::to_string(row.n) +
                             " m_k multiset differs: got " + joined);
    }
    t.csv.push_back(std::to_string(row.n) + "," + joined);
    t.rows.push_back({{"n", row.n}, {"m", got}});
  }
  return t;
}

TableOutcome BoundTable(int which, std::pair<int, int> range,
                        const GlobalOptions& g, std::ostream& err) {
  const int n = which == 2 ? 6 : 7;
  const auto& rows =
      which == 2 ? GetExpectedTables().table2 : GetExpectedTables().table4;
  const SdpPipeline pipeline = PrepareSdp(n, SdpMode::kBlock, g.seed, false);
  const CharacterTable& table = pipeline.index->group().table();
  const int count = range.second - range.first;
  std::vector<SdpBoundResult> sdp(count);
  std::vector<LpBoundResult> lp(count);
  std::mutex log_mu;
  ParallelFor(g.jobs, count, [&](int i) {
    const std::vector<int>& d = rows[range.first + i].distances;
    lp[i] = SolveLp(BuildLp(table, d), table);
    sdp[i] = SolveSdpBound(Assemble(pipeline, d, false));
    std::lock_guard<std::mutex> lock(log_mu);
    err << "table " << which << " row " << range.first + i + 1 << ' '
        << FormatSet(d) << ": M_SDP " << sdp[i].floored_bound << ", M_LP "
        << lp[i].floored_bound << '\n';
  });
  TableOutcome t;
  t.csv.push_back("D,M_SDP,M_LP,product");
  for (int i = 0; i < count; ++i) {
    const BoundRow& row = rows[range.first + i];
    const std::string set = FormatSet(row.distances);
    const std::string where =
        "row " + std::to_string(range.first + i + 1) + " " + set;
    const int64_t product = TrivialProductBound(row.distances);
    Compare(t, where, "M_SDP", row.sdp, sdp[i].floored_bound);
    Compare(t, where, "M_LP", row.lp, lp[i].floored_bound);
    if (product != row.product) {
      if (row.corrected_product == product) {
        t.errata.push_back(where + " product: published " +
                           std::to_string(row.product) + ", actual " +
                           std::to_string(product));
      } else {
        Compare(t, where, "product", row.product, product);
      }
    }
    if (!Converged(sdp[i].status)) {
      t.solver_failure = true;
      t.mismatches.push_back(where + " M_SDP: solver " +
                             ToString(sdp[i].status) + " " + sdp[i].message);
    }
    std::ostringstream raw;
    raw << std::setprecision(10) << sdp[i].raw_optimum;
    t.csv.push_back("\"" + set + "\"," + std::to_string(sdp[i].floored_bound) +
                    "," + std::to_string(lp[i].floored_bound) + "," +
                    std::to_string(product));
    t.rows.push_back({{"D", row.distances},
                      {"sdp",
                       {{"floored", sdp[i].floored_bound},
                        {"raw", sdp[i].raw_optimum},
                        {"dual", sdp[i].dual_objective},
                        {"status", ToString(sdp[i].status)},
                        {"expected", row.sdp}}},
                      {"lp",
                       {{"floored", lp[i].floored_bound},
                        {"raw", ToString(lp[i].raw_optimum)},
                        {"expected", row.lp}}},
                      {"product", {{"value", product}, {"expected", row.product}}}});
  }
  return t;
}

int RunTables(Context& ctx, int which, const std::string& rows_text) {
  const ExpectedTables& e = GetExpectedTables();
  const int count = which == 1   ? static_cast<int>(e.table1.size())
                    : which == 2 ? static_cast<int>(e.table2.size())
                    : which == 3 ? static_cast<int>(e.table3.size())
                                 : static_cast<int>(e.table4.size());
  const auto range = ParseRows(rows_text, count);
  TableOutcome t = which == 1   ? Table1(range)
                   : which == 3 ? Table3(range)
                                : BoundTable(which, range, ctx.global, ctx.err);
  if (!ctx.global.csv.empty()) {
    std::ofstream f(ctx.global.csv);
    for (const auto& line : t.csv) f << line << '\n';
    if (!f) throw std::runtime_error("cannot write " + ctx.global.csv);
  }
  if (ctx.global.json) {
    Json report = NewReport(ctx, "tables", which == 2 ? 6 : which == 4 ? 7 : 0);
    report["result"] = {{"table", which},
                        {"rows_checked", range.second - range.first},
                        {"rows", t.rows},
                        {"mismatches", t.mismatches},
                        {"errata", t.errata}};
    Emit(ctx, std::move(report));
  } else {
    if (ctx.global.csv.empty()) {
      for (const auto& line : t.csv) ctx.out << line << '\n';
    } else {
      ctx.out << "wrote " << t.csv.size() - 1 << " rows to " << ctx.global.csv
              << '\n';
    }
    ctx.out << "\ntable " << which << ": " << range.second - range.first
            << " rows checked, " << t.mismatches.size() << " mismatches, "
            << t.errata.size() << " known errata\n";
    for (const auto& m : t.mismatches) ctx.out << "  MISMATCH " << m << '\n';
    for (const auto& m : t.errata) ctx.out << "  erratum  " << m << '\n';
  }
  if (t.solver_failure) return kExitSolverFailure;
  return t.mismatches.empty() ? kExitOk : kExitMismatch;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  Context ctx{GlobalOptions{}, std::vector<std::string>(argv, argv + argc),
              out, err};
  GlobalOptions& g = ctx.global;

  CLI::App app{"Bounds for permutation codes: characters, association "
               "scheme, Delsarte LP and block-diagonalized SDP."};
  app.name("permcode");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  app.add_flag("--json", g.json, "Print a JSON report");
  app.add_option("--csv", g.csv, "Write table output as CSV to this path");
  app.add_option("--seed", g.seed, "Seed for randomized probes");
  app.add_option("--jobs", g.jobs, "Worker threads for independent rows")
      ->check(CLI::PositiveNumber);
  app.add_flag("--allow-slow", g.allow_slow,
               "Permit computations that take hours or tens of GB");

  int n = 0;
  auto add_n = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "Degree of the symmetric group")->required();
  };

  CLI::App* chars = app.add_subcommand("chars", "Character table of Sym(n)");
  add_n(chars);

  bool tensor = false;
  CLI::App* scheme =
      app.add_subcommand("scheme", "Conjugacy scheme: weights, Q, p tensor");
  add_n(scheme);
  scheme->add_flag("--tensor", tensor, "Include the p_ij^k tensor");

  DistanceArgs dargs;
  CLI::App* lp = app.add_subcommand("lp", "Delsarte LP bound (exact)");
  add_n(lp);
  AddDistanceOptions(lp, dargs);

  bool enumerate = false, swap = false;
  std::string save;
  CLI::App* orbits =
      app.add_subcommand("orbits", "Orbit counts of Sym(n)^2");
  add_n(orbits);
  orbits->add_flag("--enumerate", enumerate, "Enumerate the orbits (n <= 7)");
  orbits->add_flag("--swap", swap, "Also count transpose classes");
  orbits->add_option("--save", save, "Write the orbit id array (PCOI)");

  bool multiplicities = false, terwilliger = false, dense = false;
  CLI::App* algebra =
      app.add_subcommand("algebra", "Centralizer algebra structure");
  add_n(algebra);
  algebra->add_flag("--multiplicities", multiplicities,
                    "Block sizes m_k and degrees d_k");
  algebra->add_flag("--terwilliger-dim", terwilliger,
                    "Dimension of the algebra generated by A_i and E'_i");
  algebra->add_flag("--dense", dense, "Use dense matrices (n <= 5)");

  CLI::App* blocks =
      app.add_subcommand("blocks", "Basic blocks of the centralizer algebra");
  add_n(blocks);
  blocks->add_option("--save", save, "Write the basic blocks (PCBB)");

  std::string mode = "block", export_path;
  CLI::App* sdp = app.add_subcommand("sdp", "SDP bound");
  add_n(sdp);
  AddDistanceOptions(sdp, dargs);
  sdp->add_option("--mode", mode, "full (n <= 5) or block")
      ->check(CLI::IsMember({"full", "block"}));
  sdp->add_option("--export-sdpa", export_path,
                  "Write the problem in SDPA sparse format");
  int max_iterations = SdpOptions{}.max_iterations;
  sdp->add_option("--max-iterations", max_iterations,
                  "Interior-point iteration limit")
      ->check(CLI::PositiveNumber);

  int which = 0;
  std::string rows;
  CLI::App* tables =
      app.add_subcommand("tables", "Reproduce and check a published table");
  tables->add_option("--which", which, "Table number")
      ->required()
      ->check(CLI::Range(1, 4));
  tables->add_option("--rows", rows, "Row range k..l (1-based)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "permcode: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (chars->parsed()) return RunChars(ctx, n);
    if (scheme->parsed()) return RunScheme(ctx, n, tensor);
    if (lp->parsed()) return RunLp(ctx, n, dargs);
    if (orbits->parsed()) return RunOrbits(ctx, n, enumerate, swap, save);
    if (algebra->parsed()) {
      return RunAlgebra(ctx, n, multiplicities, terwilliger, dense);
    }
    if (blocks->parsed()) return RunBlocks(ctx, n, save);
    if (sdp->parsed()) return RunSdp(ctx, n, dargs, mode, export_path, max_iterations);
    if (tables->parsed()) return RunTables(ctx, which, rows);
  } catch (const UsageError& e) {
    err << "permcode: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "permcode: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "permcode: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "permcode: capacity: " << e.what() << '\n';
    return kExitCapacity;
  }
  return kExitUsage;
}

}  // namespace permcode
