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

#ifndef GDL_IO_H_
#define GDL_IO_H_

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gdl/dynamics.h"
#include "gdl/equilibrium.h"
#include "gdl/game_models.h"
#include "gdl/learning.h"
#include "gdl/stability.h"

namespace gdl {

using Json = nlohmann::ordered_json;

// A game parsed from a spec file plus its optional "config" object.
struct GameSpec {
  Game game;
  Json config = Json::object();
};

// Game spec schema (JSON, UTF-8):
//
//   {"kind": "builtin", "name": "cournot", "params": {"b": [0.5, 0.5]}}
//
//   {"kind": "finite", "name": "my_game", "players": 2, "actions": [2, 2],
//    "action_labels": [["C", "D"], ["C", "D"]],
//    "payoffs": [[[3, 0], [5, 1]], [[3, 5], [0, 1]]]}
//
// payoffs[i] is player i's tensor as nested lists, first player outermost.
// "name", "players", "action_labels" and "action_values" are optional. Either
// kind may carry "config": {"eta", "gamma", "T", "resolution", "seed", "x0",
// ...}, which command-line flags override.
//
// Malformed JSON raises ParseError with line and column; shape problems raise
// DimensionError naming the offending path, e.g. "payoffs[0][1]".
GameSpec ParseGameSpecText(const std::string& text);
GameSpec ParseGameSpecFile(const std::string& path);

// "builtin:<name>[:k=v,k=v1;v2,...]" or a spec file path.
GameSpec ParseGameArgument(const std::string& argument);

// Inverse of the parser; dumping a parsed spec and parsing it again yields
// the same JSON.
Json GameToJson(const Game& game);

// Pretty-printed JSON with a trailing newline.
std::string DumpJson(const Json& value);

Json VectorToJson(const Vector& v);
Json ToJson(const EquilibriumCandidate& c);
Json ToJson(const MonotonicityReport& report);
Json ToJson(const LinearStabilityResult& result);
Json ToJson(const PureDeviationResult& result);
// Scan metadata for the JSON sidecar.
Json ScanSidecar(const RegionScan& scan);

// CSV writers: header row, 17 significant digits, LF line endings.
void WriteTrajectoryCsv(std::ostream& out, const TrajectoryRecord& record);
void WriteScanCsv(std::ostream& out, const RegionScan& scan);
void WriteHistoryCsv(std::ostream& out, const PlayHistory& history);
// Rows at t = every, 2 every, ..., plus the final round.
void WriteStrategySnapshotsCsv(std::ostream& out, const PlayHistory& history, int every);
void WriteRegretCsv(std::ostream& out, const std::vector<std::vector<double>>& curves);

// Reads one row of numbers (comma, semicolon or whitespace separated) from
// a file, skipping a header line that does not parse as numbers.
Vector ReadPointCsv(const std::string& path);

// Parses "a;b;c" or "a,b,c" into a vector.
Vector ParseNumberList(const std::string& text);

}  // namespace gdl

#endif  // GDL_IO_H_
