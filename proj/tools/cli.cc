// Copyright 2026 The Game Dynamics Lab Authors.
//
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

#include "cli.h"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gdl/catalog.h"
#include "gdl/dynamics.h"
#include "gdl/equilibrium.h"
#include "gdl/io.h"
#include "gdl/learning.h"
#include "gdl/stability.h"

namespace gdl {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string game;
  std::optional<double> eta;
  std::optional<double> gamma;
  std::optional<int> horizon;
  std::optional<std::string> x0;
  std::optional<int> resolution;
  std::optional<std::uint64_t> seed;
  std::string out = ".";
  std::optional<std::string> mode;
  std::optional<std::string> eq;
  std::optional<double> final_time;
  std::optional<double> h;
  std::optional<double> stop_tol;
  std::optional<std::string> q;
  std::optional<int> snapshot_every;
  std::optional<int> validate;
};

// Resolved settings shared by the subcommands; flags win over the spec
// file's config object, which wins over defaults.
class Settings {
 public:
  explicit Settings(const Json& config) : config_(config) {}

  double Double(const std::optional<double>& flag, const char* key, double fallback) {
    double v = fallback;
    if (flag) {
      v = *flag;
    } else if (config_.contains(key)) {
      if (!config_[key].is_number()) throw ParameterError(std::string("config.") + key + " must be a number");
      v = config_[key].get<double>();
    }
    echo_[key] = v;
    return v;
  }

  long long Integer(const std::optional<long long>& flag, const char* key, long long fallback) {
    long long v = fallback;
    if (flag) {
      v = *flag;
    } else if (config_.contains(key)) {
      if (!config_[key].is_number_integer()) {
        throw ParameterError(std::string("config.") + key + " must be an integer");
      }
      v = config_[key].get<long long>();
    }
    echo_[key] = v;
    return v;
  }

  std::string String(const std::optional<std::string>& flag, const char* key,
                     const std::string& fallback) {
    std::string v = fallback;
    if (flag) {
      v = *flag;
    } else if (config_.contains(key)) {
      if (!config_[key].is_string()) throw ParameterError(std::string("config.") + key + " must be a string");
      v = config_[key].get<std::string>();
    }
    echo_[key] = v;
    return v;
  }

  const Json& echo() const { return echo_; }

 private:
  Json config_;
  Json echo_ = Json::object();
};

std::optional<long long> Widen(const std::optional<int>& v) {
  if (!v) return std::nullopt;
  return *v;
}

std::optional<long long> Widen(const std::optional<std::uint64_t>& v) {
  if (!v) return std::nullopt;
  return static_cast<long long>(*v);
}

class Outputs {
 public:
  explicit Outputs(fs::path dir) : dir_(std::move(dir)) {}

  const fs::path& dir() const { return dir_; }

  void Write(const std::string& name, const std::function<void(std::ostream&)>& body) {
    const fs::path path = dir_ / name;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ParameterError("cannot write '" + path.string() + "'");
    body(file);
    file.flush();
    if (!file) throw ParameterError("failed writing '" + path.string() + "'");
    files_.push_back(name);
  }

  void WriteJson(const std::string& name, const Json& value) {
    Write(name, [&](std::ostream& os) { os << DumpJson(value); });
  }

  const std::vector<std::string>& files() const { return files_; }

 private:
  fs::path dir_;
  std::vector<std::string> files_;
};

int DefaultResolution(const FeasibleSet& set) {
  const int free_dims =
      set.is_box() ? set.dimension() : set.dimension() - set.num_blocks();
  if (free_dims <= 2) return 201;
  if (free_dims <= 4) return 61;
  return 0;
}

struct Equilibria {
  std::vector<EquilibriumCandidate> pure;
  std::vector<EquilibriumCandidate> mixed;
  std::vector<EquilibriumCandidate> interior;
  std::vector<std::string> notes;
};

Equilibria FindEquilibria(const Game& game, double gamma, std::uint64_t seed) {
  Equilibria eq;
  const FeasibleSet& set = game.feasible_set();
  if (game.is_finite()) {
    eq.pure = EnumeratePureNash(game.finite());
    eq.mixed = FindMixedEquilibria(game.finite(), 20, seed);
    return eq;
  }
  EquilibriumCandidate fp = FixedPointSolve(game, set, gamma, set.Center(), 1e-12, 1000000);
  if (fp.converged && fp.vi_gap <= 1e-8) {
    eq.interior.push_back(fp);
  } else {
    eq.notes.push_back("fixed-point iteration did not converge from the center");
  }
  try {
    const Vector root = InteriorRootSolve(game, set.Center());
    if (set.Contains(root, 0.0) && set.IsInterior(root)) {
      bool duplicate = false;
      for (auto& c : eq.interior) {
        if ((c.point - root).norm() < 1e-8) {
          duplicate = true;
          c.point = root;
          c.vi_gap = ViGap(game, set, root);
          c.residual = FixedPointResidual(game, set, root, gamma);
        }
      }
      if (!duplicate) {
        EquilibriumCandidate c;
        c.point = root;
        c.kind = EquilibriumKind::kInteriorContinuous;
        c.vi_gap = ViGap(game, set, root);
        c.residual = FixedPointResidual(game, set, root, gamma);
        eq.interior.push_back(c);
      }
    }
  } catch (const NumericalError& e) {
    eq.notes.push_back(std::string("Newton from the center failed: ") + e.what());
  }
  return eq;
}

Vector ResolveEquilibrium(const Game& game, const std::string& spec, double gamma,
                          std::uint64_t seed) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos) {
    throw ParameterError("--eq must look like pure:1, mixed:1, interior:1 or point:a;b");
  }
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "point") {
    const Vector x = ParseNumberList(arg);
    game.feasible_set().CheckContains(x, "--eq point");
    return x;
  }
  int index = 0;
  try {
    std::size_t used = 0;
    index = std::stoi(arg, &used);
    if (used != arg.size()) throw std::invalid_argument(arg);
  } catch (const std::exception&) {
    throw ParameterError("--eq index '" + arg + "' is not an integer");
  }
  const Equilibria eq = FindEquilibria(game, gamma, seed);
  const std::vector<EquilibriumCandidate>* list = nullptr;
  if (kind == "pure") list = &eq.pure;
  if (kind == "mixed") list = &eq.mixed;
  if (kind == "interior") list = &eq.interior;
  if (!list) throw ParameterError("unknown equilibrium kind '" + kind + "'");
  if (index < 1 || index > static_cast<int>(list->size())) {
    throw ParameterError("--eq " + spec + ": there are " + std::to_string(list->size()) +
                         " " + kind + " equilibria (indices start at 1)");
  }
  return (*list)[index - 1].point;
}

std::string DefaultEquilibrium(const Game& game) {
  return game.is_finite() ? "pure:1" : "interior:1";
}

Vector ResolveStart(const Game& game, const std::string& spec, std::uint64_t seed) {
  const FeasibleSet& set = game.feasible_set();
  Vector x;
  if (spec == "uniform") {
    x = set.Center();
  } else if (spec == "uniform-perturbed") {
    Rng rng(DeriveSeed(seed, 1000));
    Vector noise(set.dimension());
    for (int k = 0; k < set.dimension(); ++k) noise[k] = rng.Uniform(-0.01, 0.01);
    x = set.Project(set.Center() + noise);
  } else if (spec.rfind("vertex:", 0) == 0) {
    long long index = -1;
    try {
      index = std::stoll(spec.substr(7));
    } catch (const std::exception&) {
    }
    if (game.is_finite()) {
      const FiniteGame& g = game.finite();
      if (index < 0 || index >= g.num_profiles()) {
        throw ParameterError("vertex index out of range [0, " +
                             std::to_string(g.num_profiles() - 1) + "]");
      }
      x = g.PureProfilePoint(g.ProfileFromIndex(index));
    } else {
      const int dim = set.dimension();
      if (index < 0 || dim >= 62 || index >= (1LL << dim)) {
        throw ParameterError("vertex index out of range");
      }
      x.resize(dim);
      for (int k = 0; k < dim; ++k) {
        const bool upper = (index >> (dim - 1 - k)) & 1;
        x[k] = upper ? set.bounds()[k].hi : set.bounds()[k].lo;
      }
    }
  } else if (spec.rfind("csv:", 0) == 0) {
    x = ReadPointCsv(spec.substr(4));
  } else if (spec.rfind("point:", 0) == 0) {
    x = ParseNumberList(spec.substr(6));
  } else {
    throw ParameterError("--x0 must be uniform, uniform-perturbed, vertex:i, csv:path or point:a;b");
  }
  set.CheckContains(x, "--x0");
  return set.Clean(x);
}

QuadraticLyapunov MakeLyapunov(const Vector& center, const std::string& q) {
  const int dim = static_cast<int>(center.size());
  if (q.empty()) return QuadraticLyapunov(center);
  const Vector values = ParseNumberList(q);
  if (values.size() == 1) {
    return QuadraticLyapunov(center, values[0] * Matrix::Identity(dim, dim));
  }
  if (values.size() != dim) {
    throw DimensionError("--q needs 1 or " + std::to_string(dim) + " diagonal entries");
  }
  return QuadraticLyapunov(center, values.asDiagonal().toDenseMatrix());
}

Json GameIdentity(const Game& game) {
  Json out;
  out["name"] = game.name();
  out["spec"] = GameToJson(game);
  return out;
}

Json CandidateReport(const Game& game, const EquilibriumCandidate& c, int index,
                     double gamma, int resolution, std::uint64_t seed) {
  (void)seed;
  Json entry = ToJson(c);
  entry["address"] = ToString(c.kind) == "interior_continuous"
                         ? "interior:" + std::to_string(index)
                         : ToString(c.kind) + ":" + std::to_string(index);
  entry["fixed_point_residual"] = FixedPointResidual(game, game.feasible_set(), c.point, gamma);
  entry["linear_stability"] = ToJson(LinearStability(game, c.point));
  Json vs;
  if (c.kind == EquilibriumKind::kPure && game.is_finite()) {
    vs["pure_deviation"] = ToJson(PureDeviationVsCheck(game.finite(), c.profile));
  }
  if (resolution >= 2) {
    const RegionScan scan = VsScan(game, c.point, game.feasible_set(), resolution);
    vs["resolution"] = resolution;
    vs["violations"] = scan.violation_count;
    if (scan.violation_free_radius) {
      vs["violation_free_radius"] = *scan.violation_free_radius;
    } else {
      vs["violation_free_radius"] = nullptr;
    }
    const auto alpha = StrongVsAlphaFromScan(scan);
    if (alpha) {
      vs["strong_vs_alpha"] = *alpha;
    } else {
      vs["strong_vs_alpha"] = nullptr;
    }
  } else {
    vs["note"] = "grid scan skipped: too many free dimensions for the default resolution";
  }
  entry["variational_stability"] = vs;
  return entry;
}

int Analyze(const GameSpec& spec, const Options& o, Settings& settings, Outputs& outputs,
            std::ostream& out) {
  const Game& game = spec.game;
  const double gamma = settings.Double(o.gamma, "gamma", 0.1);
  if (!(gamma > 0.0)) throw ParameterError("--gamma must be positive");
  const auto seed = static_cast<std::uint64_t>(settings.Integer(Widen(o.seed), "seed", 0));
  const int resolution = static_cast<int>(
      settings.Integer(Widen(o.resolution), "resolution", DefaultResolution(game.feasible_set())));
  const Equilibria eq = FindEquilibria(game, gamma, seed);

  Json report;
  report["game"] = GameIdentity(game);
  Json list = Json::array();
  for (std::size_t k = 0; k < eq.pure.size(); ++k) {
    list.push_back(CandidateReport(game, eq.pure[k], static_cast<int>(k + 1), gamma, resolution, seed));
  }
  for (std::size_t k = 0; k < eq.mixed.size(); ++k) {
    list.push_back(CandidateReport(game, eq.mixed[k], static_cast<int>(k + 1), gamma, resolution, seed));
  }
  for (std::size_t k = 0; k < eq.interior.size(); ++k) {
    list.push_back(CandidateReport(game, eq.interior[k], static_cast<int>(k + 1), gamma, resolution, seed));
  }
  report["equilibria"] = list;
  report["notes"] = eq.notes;
  report["monotonicity"] =
      ToJson(ComputeMonotonicityReport(game, game.feasible_set(), 2000, seed));
  const SymmetryReport sym = CheckPotentialCandidate(game, 20, seed);
  report["potential_candidate"] = {{"candidate", sym.potential_candidate},
                                   {"max_asymmetry", sym.max_asymmetry},
                                   {"samples", sym.samples}};
  const ComplementsReport comp = CheckStrategicComplements(game, 20, seed);
  report["strategic_complements"] = {{"holds", comp.strategic_complements},
                                     {"min_cross_derivative", comp.min_cross_derivative},
                                     {"samples", comp.samples}};
  outputs.WriteJson("analysis.json", report);
  out << "equilibria: " << list.size() << " (pure " << eq.pure.size() << ", mixed "
      << eq.mixed.size() << ", interior " << eq.interior.size() << ")\n";
  for (const auto& entry : list) {
    out << "  " << entry["address"].get<std::string>() << " "
        << entry["point"].dump() << (entry["strict"].is_boolean() && entry["strict"].get<bool>()
                                         ? " strict"
                                         : "")
        << "\n";
  }
  if (list.empty() && !eq.notes.empty()) {
    throw NumericalError("no equilibrium found: " + eq.notes.back());
  }
  return 0;
}

int Simulate(const GameSpec& spec, const Options& o, Settings& settings, Outputs& outputs,
             std::ostream& out) {
  const Game& game = spec.game;
  SimulationConfig config;
  config.step_size = settings.Double(o.eta, "eta", 0.05);
  config.horizon = static_cast<int>(settings.Integer(Widen(o.horizon), "T", 1000));
  config.final_time = settings.Double(o.final_time, "final_time", 10.0);
  config.integrator_step = settings.Double(o.h, "h", 1e-3);
  config.stop_tolerance = settings.Double(o.stop_tol, "stop_tol", 1e-8);
  config.seed = static_cast<std::uint64_t>(settings.Integer(Widen(o.seed), "seed", 0));
  config.Validate();
  const std::string mode = settings.String(o.mode, "mode", "discrete");
  const Vector x0 = ResolveStart(game, settings.String(o.x0, "x0", "uniform"), config.seed);
  TrajectoryRecord record;
  if (mode == "discrete") {
    record = SimulateDiscrete(game, game.feasible_set(), x0, config);
  } else if (mode == "gpds") {
    record = IntegrateGpds(game, game.feasible_set(), x0, config);
  } else if (mode == "lpds") {
    record = IntegrateLpds(game, game.feasible_set(), x0, config);
  } else {
    throw ParameterError("--mode must be discrete, gpds or lpds for simulate");
  }
  outputs.Write("trajectory.csv", [&](std::ostream& os) { WriteTrajectoryCsv(os, record); });
  Json summary;
  summary["mode"] = mode;
  summary["classification"] = ToString(record.classification);
  summary["steps"] = record.states.size() - 1;
  summary["initial_state"] = VectorToJson(record.states.front());
  summary["final_state"] = VectorToJson(record.states.back());
  summary["final_displacement"] = record.step_displacements.back();
  if (record.limit_point) {
    summary["limit_point"] = VectorToJson(*record.limit_point);
  } else {
    summary["limit_point"] = nullptr;
  }
  if (record.cycle_start) {
    summary["cycle_start"] = *record.cycle_start;
  } else {
    summary["cycle_start"] = nullptr;
  }
  outputs.WriteJson("simulate.json", summary);
  out << "classification: " << ToString(record.classification) << " after "
      << record.states.size() - 1 << " steps\n";
  return 0;
}

struct ScanResult {
  RegionScan scan;
  QuadraticLyapunov lyapunov;
  std::string mode;
  Vector equilibrium;
};

ScanResult RunScan(const GameSpec& spec, const Options& o, Settings& settings) {
  const Game& game = spec.game;
  const double gamma = settings.Double(o.gamma, "gamma", 0.1);
  const double eta = settings.Double(o.eta, "eta", 0.05);
  const auto seed = static_cast<std::uint64_t>(settings.Integer(Widen(o.seed), "seed", 0));
  int resolution = static_cast<int>(
      settings.Integer(Widen(o.resolution), "resolution", DefaultResolution(game.feasible_set())));
  if (resolution < 2) {
    throw ParameterError("this game has too many free dimensions for a default grid; pass --resolution");
  }
  const std::string mode =
      settings.String(o.mode, "mode", game.is_finite() ? "discrete" : "continuous");
  const Vector center =
      ResolveEquilibrium(game, settings.String(o.eq, "eq", DefaultEquilibrium(game)), gamma, seed);
  QuadraticLyapunov lyapunov = MakeLyapunov(center, settings.String(o.q, "q", ""));
  const FeasibleSet& set = game.feasible_set();
  if (mode == "vs") {
    if (!lyapunov.IsotropicScale() || std::abs(*lyapunov.IsotropicScale() - 1.0) > 0) {
      throw ParameterError("vs scans use V = ||x - x*||^2; drop --q");
    }
    RegionScan scan = VsScan(game, center, set, resolution);
    CertifyBasin(scan, lyapunov);
    return {std::move(scan), lyapunov, mode, center};
  }
  if (mode == "discrete") {
    RegionScan scan = LyapunovScanDiscrete(game, set, lyapunov, eta, set, resolution);
    CertifyBasin(scan, lyapunov);
    return {std::move(scan), lyapunov, mode, center};
  }
  if (mode == "continuous") {
    RegionScan scan = LyapunovScanContinuous(game, lyapunov, set, resolution);
    CertifyBasin(scan, lyapunov);
    return {std::move(scan), lyapunov, mode, center};
  }
  throw ParameterError("--mode must be vs, discrete or continuous for scan and basin");
}

int Scan(const GameSpec& spec, const Options& o, Settings& settings, Outputs& outputs,
         std::ostream& out) {
  ScanResult result = RunScan(spec, o, settings);
  outputs.Write("scan.csv", [&](std::ostream& os) { WriteScanCsv(os, result.scan); });
  Json sidecar = ScanSidecar(result.scan);
  sidecar["mode"] = result.mode;
  outputs.WriteJson("scan.json", sidecar);
  out << "scan: " << result.scan.grid.size() << " points, certified_c "
      << (result.scan.certified_c ? FormatDouble(*result.scan.certified_c) : "none") << "\n";
  return 0;
}

int Basin(const GameSpec& spec, const Options& o, Settings& settings, Outputs& outputs,
          std::ostream& out) {
  ScanResult result = RunScan(spec, o, settings);
  const Game& game = spec.game;
  Json report;
  report["mode"] = result.mode;
  report["equilibrium"] = VectorToJson(result.equilibrium);
  report["resolution"] = result.scan.grid.resolution();
  report["grid_spacing"] = result.scan.grid.spacing();
  if (result.mode == "discrete") {
    report["eta"] = result.scan.eta;
  }
  const auto c = result.scan.certified_c;
  if (c) {
    report["certified_c"] = *c;
    if (auto scale = result.lyapunov.IsotropicScale()) {
      report["certified_radius"] = std::sqrt(*c / *scale);
    }
  } else {
    report["certified_c"] = nullptr;
  }
  report["scan"] = ScanSidecar(result.scan);
  const int validate = static_cast<int>(settings.Integer(Widen(o.validate), "validate", 0));
  if (validate > 0 && c) {
    std::vector<std::size_t> members;
    for (std::size_t p = 0; p < result.scan.grid.size(); ++p) {
      if (result.scan.in_uc[p]) members.push_back(p);
    }
    const auto seed = static_cast<std::uint64_t>(settings.Integer(Widen(o.seed), "seed", 0));
    Rng rng(DeriveSeed(seed, 2000));
    SimulationConfig config;
    config.step_size = result.mode == "discrete" ? result.scan.eta : 0.05;
    config.horizon = 100000;
    config.final_time = 100.0;
    int converged = 0;
    for (int k = 0; k < validate; ++k) {
      const Vector x0 = result.scan.grid.Point(
          members[static_cast<std::size_t>(rng.Uniform() * members.size())]);
      const TrajectoryRecord record =
          result.mode == "discrete"
              ? SimulateDiscrete(game, game.feasible_set(), x0, config)
              : IntegrateLpds(game, game.feasible_set(), x0, config);
      if ((record.states.back() - result.equilibrium).norm() < 1e-4) ++converged;
    }
    report["validation"] = {{"starts", validate}, {"converged", converged}};
  }
  outputs.WriteJson("basin.json", report);
  out << "certified_c: " << (c ? FormatDouble(*c) : "none") << "\n";
  return 0;
}

int Regret(const GameSpec& spec, const Options& o, Settings& settings, Outputs& outputs,
           std::ostream& out) {
  const Game& game = spec.game;
  const FiniteGame& finite = game.finite();
  const int rounds = static_cast<int>(settings.Integer(Widen(o.horizon), "T", 10000));
  if (rounds < 1) throw ParameterError("--T must be at least 1");
  const auto seed = static_cast<std::uint64_t>(settings.Integer(Widen(o.seed), "seed", 0));
  SelfPlayConfig config;
  if (o.gamma || spec.config.contains("gamma")) {
    config.exploration = settings.Double(o.gamma, "gamma", 0.05);
  }
  const int every = static_cast<int>(
      settings.Integer(Widen(o.snapshot_every), "snapshot_every", std::max(1, rounds / 100)));
  const PlayHistory history = SimulateSelfPlay(finite, config, rounds, seed);
  std::vector<std::vector<double>> curves;
  Json summary;
  Json players = Json::array();
  for (int i = 0; i < finite.num_players(); ++i) {
    curves.push_back(RegretCurve(history, finite, i));
    Json p;
    p["regret"] = curves.back().back();
    p["regret_per_round"] = curves.back().back() / rounds;
    p["average_strategy"] = VectorToJson(AverageStrategy(history, i));
    p["exploration"] = history.parameters[i].exploration;
    p["learning_rate"] = history.parameters[i].learning_rate;
    players.push_back(p);
  }
  summary["rounds"] = rounds;
  summary["seed"] = seed;
  summary["payoff_offset"] = history.payoff_offset;
  summary["payoff_scale"] = history.payoff_scale;
  summary["players"] = players;
  outputs.Write("history.csv", [&](std::ostream& os) { WriteHistoryCsv(os, history); });
  outputs.Write("regret.csv", [&](std::ostream& os) { WriteRegretCsv(os, curves); });
  outputs.Write("strategies.csv",
                [&](std::ostream& os) { WriteStrategySnapshotsCsv(os, history, every); });
  outputs.WriteJson("regret.json", summary);
  for (int i = 0; i < finite.num_players(); ++i) {
    out << "player " << i + 1 << ": R(T)/T = " << FormatDouble(curves[i].back() / rounds)
        << "\n";
  }
  return 0;
}

void AddCommonFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--game", o.game, "builtin:<name>[:k=v,...] or a game spec file")->required();
  cmd->add_option("--eta", o.eta, "step size of the discrete dynamics");
  cmd->add_option("--gamma", o.gamma, "fixed-point step, or Exp3 exploration for regret");
  cmd->add_option("--T", o.horizon, "horizon: discrete steps or learning rounds");
  cmd->add_option("--x0", o.x0, "uniform | uniform-perturbed | vertex:i | csv:path | point:a;b");
  cmd->add_option("--resolution", o.resolution, "grid points per free dimension");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--mode", o.mode, "simulate: discrete|gpds|lpds; scan/basin: vs|discrete|continuous");
  cmd->add_option("--eq", o.eq, "equilibrium: pure:k | mixed:k | interior:k | point:a;b");
  cmd->add_option("--final-time", o.final_time, "continuous-time horizon");
  cmd->add_option("--dt", o.h, "Euler step of continuous integration");
  cmd->add_option("--stop-tol", o.stop_tol, "displacement tolerance for convergence");
  cmd->add_option("--q", o.q, "Lyapunov matrix: scalar q (Q = qI) or a diagonal a;b;...");
  cmd->add_option("--snapshot-every", o.snapshot_every, "strategy snapshot interval");
  cmd->add_option("--validate", o.validate, "basin: simulate this many starts inside U_c");
}

void WriteManifest(const fs::path& dir, const std::vector<std::string>& args,
                   const std::string& command, const Json& game, const Json& config,
                   std::optional<std::uint64_t> seed, const std::vector<std::string>& files,
                   double seconds, int code, const std::string& reason) {
  Json manifest;
  manifest["command"] = command;
  manifest["arguments"] = args;
  manifest["game"] = game;
  manifest["config"] = config;
  manifest["tool_version"] = kToolVersion;
  if (seed) {
    manifest["seed"] = *seed;
  } else {
    manifest["seed"] = nullptr;
  }
  manifest["outputs"] = files;
  manifest["wall_clock_seconds"] = seconds;
  manifest["exit_code"] = code;
  manifest["status"] = code == 0 ? "ok" : "error";
  if (!reason.empty()) manifest["failure_reason"] = reason;
  std::ofstream file(dir / "manifest.json", std::ios::binary);
  file << DumpJson(manifest);
}

}  // namespace

int RunCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  CLI::App app{"Game dynamics laboratory", "gdl"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Options o;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"analyze", "equilibria, monotonicity and stability report"},
      {"simulate", "discrete or continuous projected gradient dynamics"},
      {"scan", "variational or Lyapunov grid scan with certificate"},
      {"basin", "certified sublevel set of a quadratic Lyapunov function"},
      {"regret", "Exp3 self-play and external regret"}};
  for (const auto& [name, help] : commands) AddCommonFlags(app.add_subcommand(name, help), o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands()[0]->help());
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }
  const std::string command = app.get_subcommands()[0]->get_name();

  std::optional<Outputs> outputs;
  Json game_identity = o.game;
  Json config_echo = Json::object();
  std::optional<std::uint64_t> seed = o.seed;
  int code = 0;
  std::string reason;
  try {
    fs::create_directories(o.out);
    outputs.emplace(fs::path(o.out));
  } catch (const std::exception& e) {
    err << "error: cannot create output directory '" << o.out << "': " << e.what() << "\n";
    return 1;
  }
  try {
    const GameSpec spec = ParseGameArgument(o.game);
    game_identity = GameIdentity(spec.game);
    Settings settings(spec.config);
    if (command == "analyze") code = Analyze(spec, o, settings, *outputs, out);
    if (command == "simulate") code = Simulate(spec, o, settings, *outputs, out);
    if (command == "scan") code = Scan(spec, o, settings, *outputs, out);
    if (command == "basin") code = Basin(spec, o, settings, *outputs, out);
    if (command == "regret") code = Regret(spec, o, settings, *outputs, out);
    config_echo = settings.echo();
    if (config_echo.contains("seed")) seed = config_echo["seed"].get<std::uint64_t>();
  } catch (const NumericalError& e) {
    code = 2;
    reason = e.what();
  } catch (const Error& e) {
    code = 1;
    reason = e.what();
  } catch (const std::exception& e) {
    code = 2;
    reason = std::string("unexpected failure: ") + e.what();
  }
  if (code != 0) err << "error: " << reason << "\n";
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  try {
    WriteManifest(outputs->dir(), args, command, game_identity, config_echo, seed,
                  outputs->files(), seconds, code, reason);
  } catch (const std::exception& e) {
    err << "error: cannot write manifest: " << e.what() << "\n";
    if (code == 0) code = 1;
  }
  return code;
}

}  // namespace gdl
