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

#ifndef GDL_LEARNING_H_
#define GDL_LEARNING_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "gdl/game_models.h"
#include "gdl/rng.h"

namespace gdl {

// Exp3 state: weights, uniform exploration mix, learning rate, and the
// running sum of observed rewards.
struct BanditState {
  std::vector<double> weights;
  double exploration = 0.0;
  double learning_rate = 0.1;
  double cumulative_payoff = 0.0;

  int num_actions() const { return static_cast<int>(weights.size()); }
  // p = (1 - exploration) w / sum(w) + exploration / K.
  std::vector<double> Distribution() const;
  // Throws ParameterError when an invariant is broken.
  void Validate() const;
};

// Uniform weights.
BanditState MakeBanditState(int num_actions, double exploration, double learning_rate);

struct Exp3Parameters {
  double exploration = 0.05;
  double learning_rate = 0.025;
};

// exploration = min(1, sqrt(K ln K / ((e - 1) T))) for a known horizon T and
// 0.05 otherwise; learning_rate = exploration / K. A single action gets
// exploration 0 and learning rate 1.
Exp3Parameters DefaultExp3Parameters(int num_actions, std::optional<int> horizon);

int Exp3Sample(const BanditState& state, Rng& rng);

// w_a <- w_a exp(learning_rate * reward / p_a); all weights are divided by
// their maximum once it exceeds 1e100. Throws ParameterError unless reward is
// in [0, 1].
BanditState Exp3Update(BanditState state, int action, double reward);

struct SelfPlayConfig {
  // Empty values take DefaultExp3Parameters for the horizon.
  std::optional<double> exploration;
  std::optional<double> learning_rate;
};

struct PlayHistory {
  // actions[t][i], payoffs[t][i] in the game's own units.
  std::vector<std::vector<int>> actions;
  std::vector<std::vector<double>> payoffs;
  // strategies[t][i]: the distribution player i sampled from in round t.
  std::vector<std::vector<std::vector<double>>> strategies;
  // Rewards fed to Exp3 are (u - payoff_offset) / payoff_scale.
  double payoff_offset = 0.0;
  double payoff_scale = 1.0;
  std::vector<Exp3Parameters> parameters;
  std::uint64_t seed = 0;

  int rounds() const { return static_cast<int>(actions.size()); }
};

// Independent Exp3 learners with bandit feedback. Player i draws from
// Rng(DeriveSeed(seed, i)). All actions of a round are sampled before any
// learner is updated.
PlayHistory SimulateSelfPlay(const FiniteGame& game, const SelfPlayConfig& config,
                             int rounds, std::uint64_t seed);

// max_a sum_t u_i(a, a_-i,t) - sum_t u_i(a_t) over the whole history.
double ExternalRegret(const PlayHistory& history, const FiniteGame& game, int player);

// R(t) for t = 1..T, accumulated round by round.
std::vector<double> RegretCurve(const PlayHistory& history, const FiniteGame& game,
                                int player);

// Time-averaged mixed strategy of one player.
Vector AverageStrategy(const PlayHistory& history, int player);

}  // namespace gdl

#endif  // GDL_LEARNING_H_
