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

#include "gdl/io.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "gdl/catalog.h"

namespace gdl {

namespace {

std::string Csv(double v) {
  if (std::isnan(v)) return "nan";
  return FormatDouble(v);
}

void LineColumn(const std::string& text, std::size_t byte, std::size_t& line,
                std::size_t& column) {
  line = 1;
  column = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t k = 0; k < end; ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

double ParseNumber(const Json& node, const std::string& path) {
  if (!node.is_number()) throw ParseError(path + ": expected a number");
  const double v = node.get<double>();
  if (!std::isfinite(v)) throw ParameterError(path + ": value must be finite");
  return v;
}

int ParseCount(const Json& node, const std::string& path) {
  if (!node.is_number_integer() || node.get<long long>() < 1) {
    throw ParseError(path + ": expected a positive integer");
  }
  return static_cast<int>(node.get<long long>());
}

void ParseTensor(const Json& node, const std::vector<int>& counts, std::size_t depth,
                 const std::string& path, std::vector<double>& out) {
  if (depth == counts.size()) {
    out.push_back(ParseNumber(node, path));
    return;
  }
  if (!node.is_array()) throw ParseError(path + ": expected a list");
  if (static_cast<int>(node.size()) != counts[depth]) {
    throw DimensionError(path + ": expected " + std::to_string(counts[depth]) +
                         " entries, got " + std::to_string(node.size()));
  }
  for (std::size_t k = 0; k < node.size(); ++k) {
    ParseTensor(node[k], counts, depth + 1, path + "[" + std::to_string(k) + "]", out);
  }
}

Json NestTensor(const std::vector<double>& flat, const std::vector<int>& counts,
                std::size_t depth, std::size_t& pos) {
  Json node = Json::array();
  for (int k = 0; k < counts[depth]; ++k) {
    if (depth + 1 == counts.size()) {
      node.push_back(flat[pos++]);
    } else {
      node.push_back(NestTensor(flat, counts, depth + 1, pos));
    }
  }
  return node;
}

GameParams ParseParams(const Json& node) {
  GameParams params;
  if (node.is_null()) return params;
  if (!node.is_object()) throw ParseError("params: expected an object");
  for (auto it = node.begin(); it != node.end(); ++it) {
    const std::string path = "params." + it.key();
    std::vector<double> values;
    if (it.value().is_array()) {
      for (std::size_t k = 0; k < it.value().size(); ++k) {
        values.push_back(ParseNumber(it.value()[k], path + "[" + std::to_string(k) + "]"));
      }
    } else {
      values.push_back(ParseNumber(it.value(), path));
    }
    params[it.key()] = std::move(values);
  }
  return params;
}

Game ParseFinite(const Json& root) {
  if (!root.contains("actions")) throw ParseError("finite game needs 'actions'");
  const Json& actions = root["actions"];
  if (!actions.is_array() || actions.empty()) {
    throw ParseError("actions: expected a nonempty list");
  }
  std::vector<int> counts;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    counts.push_back(ParseCount(actions[i], "actions[" + std::to_string(i) + "]"));
  }
  if (root.contains("players") &&
      ParseCount(root["players"], "players") != static_cast<int>(counts.size())) {
    throw DimensionError("players: does not match the length of 'actions'");
  }
  if (!root.contains("payoffs")) throw ParseError("finite game needs 'payoffs'");
  const Json& payoffs = root["payoffs"];
  if (!payoffs.is_array()) throw ParseError("payoffs: expected a list");
  if (payoffs.size() != counts.size()) {
    throw DimensionError("payoffs: expected " + std::to_string(counts.size()) +
                         " tensors, got " + std::to_string(payoffs.size()));
  }
  std::vector<std::vector<double>> tensors(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    ParseTensor(payoffs[i], counts, 0, "payoffs[" + std::to_string(i) + "]", tensors[i]);
  }
  FiniteGame game(counts, std::move(tensors));
  if (root.contains("action_labels")) {
    const Json& node = root["action_labels"];
    std::vector<std::vector<std::string>> labels;
    if (!node.is_array()) throw ParseError("action_labels: expected a list");
    for (std::size_t i = 0; i < node.size(); ++i) {
      if (!node[i].is_array()) throw ParseError("action_labels: expected lists of strings");
      std::vector<std::string> row;
      for (const auto& label : node[i]) {
        if (!label.is_string()) throw ParseError("action_labels: expected strings");
        row.push_back(label.get<std::string>());
      }
      labels.push_back(std::move(row));
    }
    game.set_action_labels(std::move(labels));
  }
  if (root.contains("action_values")) {
    const Json& node = root["action_values"];
    std::vector<std::vector<double>> values;
    if (!node.is_array()) throw ParseError("action_values: expected a list");
    for (std::size_t i = 0; i < node.size(); ++i) {
      std::vector<double> row;
      for (std::size_t k = 0; k < node[i].size(); ++k) {
        row.push_back(ParseNumber(node[i][k], "action_values[" + std::to_string(i) + "][" +
                                                  std::to_string(k) + "]"));
      }
      values.push_back(std::move(row));
    }
    game.set_action_values(std::move(values));
  }
  const std::string name =
      root.contains("name") && root["name"].is_string() ? root["name"].get<std::string>()
                                                        : "finite";
  return Game(std::move(game), name);
}

}  // namespace

GameSpec ParseGameSpecText(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 0, column = 0;
    LineColumn(text, e.byte, line, column);
    std::string what = e.what();
    const std::size_t cut = what.find("parse error");
    throw ParseError(cut == std::string::npos ? what : what.substr(cut), line, column);
  }
  if (!root.is_object()) throw ParseError("game spec must be a JSON object");
  if (!root.contains("kind") || !root["kind"].is_string()) {
    throw ParseError("game spec needs a string field 'kind'");
  }
  const std::string kind = root["kind"].get<std::string>();
  Json config = Json::object();
  if (root.contains("config")) {
    if (!root["config"].is_object()) throw ParseError("config: expected an object");
    config = root["config"];
  }
  if (kind == "builtin") {
    if (!root.contains("name") || !root["name"].is_string()) {
      throw ParseError("builtin spec needs a string field 'name'");
    }
    const GameParams params = ParseParams(root.contains("params") ? root["params"] : Json());
    return {LoadBuiltin(root["name"].get<std::string>(), params), config};
  }
  if (kind == "finite") return {ParseFinite(root), config};
  throw ParseError("unknown kind '" + kind + "' (expected finite or builtin)");
}

GameSpec ParseGameSpecFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open game spec '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseGameSpecText(buffer.str());
}

GameSpec ParseGameArgument(const std::string& argument) {
  const std::string prefix = "builtin:";
  if (argument.rfind(prefix, 0) != 0) return ParseGameSpecFile(argument);
  const std::string rest = argument.substr(prefix.size());
  const std::size_t colon = rest.find(':');
  const std::string name = rest.substr(0, colon);
  GameParams params;
  if (colon != std::string::npos) {
    std::stringstream items(rest.substr(colon + 1));
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty()) continue;
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ParameterError("builtin parameter '" + item + "' is not of the form k=v");
      }
      const Vector values = ParseNumberList(item.substr(eq + 1));
      params[item.substr(0, eq)] = std::vector<double>(values.data(), values.data() + values.size());
    }
  }
  return {LoadBuiltin(name, params), Json::object()};
}

Json GameToJson(const Game& game) {
  Json out;
  if (game.is_builtin()) {
    out["kind"] = "builtin";
    out["name"] = game.name();
    Json params = Json::object();
    for (const auto& [key, values] : game.params()) {
      if (values.size() == 1) {
        params[key] = values[0];
      } else {
        params[key] = values;
      }
    }
    out["params"] = params;
    return out;
  }
  const FiniteGame& finite = game.finite();
  out["kind"] = "finite";
  out["name"] = game.name();
  out["players"] = finite.num_players();
  out["actions"] = finite.action_counts();
  if (!finite.action_labels().empty()) out["action_labels"] = finite.action_labels();
  if (!finite.action_values().empty()) out["action_values"] = finite.action_values();
  Json payoffs = Json::array();
  for (const auto& tensor : finite.payoffs()) {
    std::size_t pos = 0;
    payoffs.push_back(NestTensor(tensor, finite.action_counts(), 0, pos));
  }
  out["payoffs"] = payoffs;
  return out;
}

std::string DumpJson(const Json& value) { return value.dump(2) + "\n"; }

Json VectorToJson(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v[k]);
  return out;
}

Json ToJson(const EquilibriumCandidate& c) {
  Json out;
  out["kind"] = ToString(c.kind);
  out["point"] = VectorToJson(c.point);
  if (!c.profile.empty()) out["profile"] = c.profile;
  if (c.strict) {
    out["strict"] = *c.strict;
  } else {
    out["strict"] = nullptr;
  }
  out["vi_gap"] = c.vi_gap;
  out["converged"] = c.converged;
  out["iterations"] = c.iterations;
  out["residual"] = c.residual;
  return out;
}

Json ToJson(const MonotonicityReport& r) {
  Json out;
  out["classification"] = ToString(r.classification);
  if (r.strong_modulus) {
    out["strong_modulus"] = *r.strong_modulus;
  } else {
    out["strong_modulus"] = nullptr;
  }
  out["evidence"] = {{"pairs", r.pairs},
                     {"monotone_violations", r.monotone_violations},
                     {"strict_violations", r.strict_violations},
                     {"strong_violations", r.strong_violations},
                     {"pseudomonotone_violations", r.pseudomonotone_violations},
                     {"alpha_infimum", r.alpha_infimum},
                     {"max_abs_inner_product", r.max_abs_inner_product}};
  out["jacobian_definiteness"] = {{"max_symmetrized_eigenvalue", r.max_symmetrized_eigenvalue},
                                  {"samples", r.jacobian_samples},
                                  {"exact", r.exact_jacobian_test}};
  return out;
}

Json ToJson(const LinearStabilityResult& r) {
  Json out;
  Json eig = Json::array();
  for (const auto& ev : r.eigenvalues) eig.push_back({ev.real(), ev.imag()});
  out["eigenvalues"] = eig;
  out["verdict"] = ToString(r.verdict);
  out["interior"] = r.interior;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json ToJson(const PureDeviationResult& r) {
  Json out;
  out["holds"] = r.holds;
  if (!r.holds) {
    out["witness"] = r.witness;
    out["witness_sum"] = r.witness_sum;
  }
  return out;
}

Json ScanSidecar(const RegionScan& scan) {
  Json out;
  out["kind"] = ToString(scan.kind);
  out["resolution"] = scan.grid.resolution();
  out["grid_points"] = scan.grid.size();
  out["grid_spacing"] = scan.grid.spacing();
  out["center"] = VectorToJson(scan.center);
  Json q = Json::array();
  for (Eigen::Index r = 0; r < scan.q.rows(); ++r) {
    q.push_back(VectorToJson(scan.q.row(r).transpose()));
  }
  out["Q"] = q;
  if (scan.kind == ScanKind::kDiscreteLyapunov) {
    out["eta"] = scan.eta;
  } else {
    out["eta"] = nullptr;
  }
  out["vs_violations"] = scan.violation_count;
  if (scan.violation_free_radius) {
    out["violation_free_radius"] = *scan.violation_free_radius;
  } else {
    out["violation_free_radius"] = nullptr;
  }
  if (scan.kind == ScanKind::kDiscreteLyapunov) {
    out["dominance_violations"] = scan.dominance_violations;
    out["max_dominance_excess"] = scan.max_dominance_excess;
    out["inclusion_violations"] = scan.inclusion_violations;
  }
  std::size_t in_v = 0, in_vbar = 0, in_uc = 0;
  for (std::size_t p = 0; p < scan.grid.size(); ++p) {
    in_v += scan.in_v[p] != 0;
    in_vbar += scan.in_vbar[p] != 0;
    in_uc += scan.in_uc[p] != 0;
  }
  out["in_V"] = in_v;
  out["in_Vbar"] = in_vbar;
  out["in_Uc"] = in_uc;
  if (scan.certified_c) {
    out["certified_c"] = *scan.certified_c;
  } else {
    out["certified_c"] = nullptr;
  }
  return out;
}

void WriteTrajectoryCsv(std::ostream& out, const TrajectoryRecord& record) {
  const Eigen::Index dim = record.states.empty() ? 0 : record.states[0].size();
  out << "t";
  for (Eigen::Index k = 0; k < dim; ++k) out << ",x_" << k;
  out << ",grad_norm,displacement\n";
  for (std::size_t t = 0; t < record.states.size(); ++t) {
    out << Csv(record.times[t]);
    for (Eigen::Index k = 0; k < dim; ++k) out << ',' << Csv(record.states[t][k]);
    out << ',' << Csv(record.gradient_norms[t]) << ',' << Csv(record.step_displacements[t])
        << '\n';
  }
}

void WriteScanCsv(std::ostream& out, const RegionScan& scan) {
  const int dim = scan.grid.dimension();
  for (int k = 0; k < dim; ++k) out << "x_" << k << ',';
  out << "V,s,deltaV,deltaVbar,in_V,in_Vbar,in_Uc\n";
  Vector x;
  for (std::size_t p = 0; p < scan.grid.size(); ++p) {
    scan.grid.PointInto(p, x);
    for (int k = 0; k < dim; ++k) out << Csv(x[k]) << ',';
    out << Csv(scan.v[p]) << ',' << Csv(scan.s[p]) << ',' << Csv(scan.delta_v[p]) << ','
        << Csv(scan.delta_v_bar[p]) << ',' << int(scan.in_v[p] != 0) << ','
        << int(scan.in_vbar[p] != 0) << ',' << int(scan.in_uc[p] != 0) << '\n';
  }
}

void WriteHistoryCsv(std::ostream& out, const PlayHistory& history) {
  const std::size_t n = history.actions.empty() ? 0 : history.actions[0].size();
  out << "t";
  for (std::size_t i = 1; i <= n; ++i) out << ",a_" << i;
  for (std::size_t i = 1; i <= n; ++i) out << ",u_" << i;
  out << '\n';
  for (int t = 0; t < history.rounds(); ++t) {
    out << t + 1;
    for (int a : history.actions[t]) out << ',' << a;
    for (double u : history.payoffs[t]) out << ',' << Csv(u);
    out << '\n';
  }
}

void WriteStrategySnapshotsCsv(std::ostream& out, const PlayHistory& history, int every) {
  if (every < 1) throw ParameterError("snapshot interval must be positive");
  if (history.rounds() == 0) return;
  const auto& first = history.strategies[0];
  out << "t";
  for (std::size_t i = 0; i < first.size(); ++i) {
    for (std::size_t k = 0; k < first[i].size(); ++k) out << ",p_" << i + 1 << '_' << k;
  }
  out << '\n';
  for (int t = 1; t <= history.rounds(); ++t) {
    if (t % every != 0 && t != history.rounds()) continue;
    out << t;
    for (const auto& dist : history.strategies[t - 1]) {
      for (double p : dist) out << ',' << Csv(p);
    }
    out << '\n';
  }
}

void WriteRegretCsv(std::ostream& out, const std::vector<std::vector<double>>& curves) {
  out << "t";
  for (std::size_t i = 1; i <= curves.size(); ++i) out << ",R_" << i;
  out << '\n';
  const std::size_t rounds = curves.empty() ? 0 : curves[0].size();
  for (std::size_t t = 0; t < rounds; ++t) {
    out << t + 1;
    for (const auto& c : curves) out << ',' << Csv(c[t]);
    out << '\n';
  }
}

Vector ParseNumberList(const std::string& text) {
  std::vector<double> values;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || !std::isfinite(v)) {
      throw ParameterError("'" + token + "' is not a finite number");
    }
    values.push_back(v);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ';' || ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  if (values.empty()) throw ParameterError("expected at least one number");
  return Eigen::Map<Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

Vector ReadPointCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open point file '" + path + "'");
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      return ParseNumberList(line);
    } catch (const ParameterError&) {
      if (!first) throw;
    }
    first = false;
  }
  throw ParameterError("point file '" + path + "' has no numeric row");
}

}  // namespace gdl
