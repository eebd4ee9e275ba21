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

#ifndef GDL_CATALOG_H_
#define GDL_CATALOG_H_

#include <string>
#include <vector>

#include "gdl/game_models.h"

namespace gdl {

// Names accepted by LoadBuiltin, in catalog order.
const std::vector<std::string>& BuiltinNames();

// Default parameters of a builtin; empty for parameter-free games.
GameParams DefaultBuiltinParams(const std::string& name);

// Builds a catalog game. Unknown names and invalid or unrecognized parameters
// raise ParameterError. Missing parameters take their defaults.
//
//   tullock                    V=1, r=2, eps=1e-3; box [eps, V]^2
//   spiral                     C=1; box [-C, C]^2
//   cournot                    b0=1, b=(1/2,1/2), c=(0,0), upper=1
//   prisoners_dilemma          2x2
//   battle_of_sexes            2x2
//   matching_pennies           2x2, A2 = -A1'
//   extended_matching_pennies  r=1, q=2 with r > 0 and q > 1; 3x3
//   milionis_cycle             3x3
//   weak_pne_cycle             3x3
Game LoadBuiltin(const std::string& name, const GameParams& params = {});

}  // namespace gdl

#endif  // GDL_CATALOG_H_
