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

#include "gdl/learning.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace gdl {

std::vector<double> BanditState::Distribution() const {
  const int k = num_actions();
  double total = 0.0;
  for (double w : weights) total += w;
  std::vector<double> p(k);
  for (int a = 0; a < k; ++a) {
    p[a] = (1.0 - exploration) * weights[a] / total + exploration / k;
  }
  return p;
}

void BanditState::Validate() const {
  if (weights.empty()) throw ParameterError("bandit needs at least one action");
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw ParameterError("bandit weights must be finite and positive");
    }
  }
  if (!(exploration >= 0.0 && exploration <= 1.0)) {
    throw ParameterError("exploration rate must lie in [0, 1]");
  }
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw ParameterError("learning rate must be positive");
  }
}

BanditState MakeBanditState(int num_actions, double exploration, double learning_rate) {
  BanditState state;
  state.weights.assign(std::max(num_actions, 0), 1.0);
  state.exploration = exploration;
  state.learning_rate = learning_rate;
  state.Validate();
  return state;
}

Exp3Parameters DefaultExp3Parameters(int num_actions, std::optional<int> horizon) {
  if (num_actions < 1) throw ParameterError("bandit needs at least one action");
  if (num_actions == 1) return {0.0, 1.0};
  Exp3Parameters params;
  if (horizon) {
    if (*horizon < 1) throw ParameterError("horizon must be positive");
    const double k = num_actions;
    params.exploration =
        std::min(1.0, std::sqrt(k * std::log(k) / ((std::numbers::e - 1.0) * *horizon)));
  } else {
    params.exploration = 0.05;
  }
  params.learning_rate = params.exploration / num_actions;
  return params;
}

int Exp3Sample(const BanditState& state, Rng& rng) {
  if (state.num_actions() == 1) return 0;
  return rng.Categorical(state.Distribution());
}

BanditState Exp3Update(BanditState state, int action, double reward) {
  if (!(reward >= 0.0 && reward <= 1.0)) {
    throw ParameterError("reward " + FormatDouble(reward) + " is outside [0, 1]");
  }
  if (action < 0 || action >= state.num_actions()) {
    throw ParameterError("action index out of range");
  }
  state.cumulative_payoff += reward;
  if (reward == 0.0) return state;
  const double p = state.Distribution()[action];
  state.weights[action] *= std::exp(state.learning_rate * reward / p);
  const double largest = *std::max_element(state.weights.begin(), state.weights.end());
  if (largest > 1e100) {
    for (double& w : state.weights) w /= largest;
    // Entries that underflow would break positivity; keep them tiny.
    for (double& w : state.weights) w = std::max(w, std::numeric_limits<double>::min());
  }
  return state;
}

PlayHistory SimulateSelfPlay(const FiniteGame& game, const SelfPlayConfig& config,
                             int rounds, std::uint64_t seed) {
  if (rounds < 1) throw ParameterError("self-play needs at least one round");
  const int n = game.num_players();
  PlayHistory history;
  history.seed = seed;
  history.payoff_offset = game.MinPayoff();
  const double range = game.MaxPayoff() - game.MinPayoff();
  history.payoff_scale = range > 0.0 ? range : 1.0;

  std::vector<BanditState> learners;
  std::vector<Rng> rngs;
  for (int i = 0; i < n; ++i) {
    const int k = game.action_counts()[i];
    Exp3Parameters params = DefaultExp3Parameters(k, rounds);
    if (config.exploration) params.exploration = *config.exploration;
    if (config.learning_rate) {
      params.learning_rate = *config.learning_rate;
    } else if (config.exploration && k > 1) {
      params.learning_rate = params.exploration / k;
    }
    history.parameters.push_back(params);
    learners.push_back(MakeBanditState(k, params.exploration, params.learning_rate));
    rngs.emplace_back(DeriveSeed(seed, i));
  }

  history.actions.reserve(rounds);
  history.payoffs.reserve(rounds);
  history.strategies.reserve(rounds);
  std::vector<int> profile(n);
  for (int t = 0; t < rounds; ++t) {
    std::vector<std::vector<double>> strategies(n);
    for (int i = 0; i < n; ++i) {
      strategies[i] = learners[i].Distribution();
      profile[i] = Exp3Sample(learners[i], rngs[i]);
    }
    const std::int64_t idx = game.ProfileIndex(profile);
    std::vector<double> payoffs(n);
    for (int i = 0; i < n; ++i) {
      payoffs[i] = game.Payoff(i, idx);
      double reward = range > 0.0 ? (payoffs[i] - history.payoff_offset) / range : 0.5;
      reward = std::clamp(reward, 0.0, 1.0);
      learners[i] = Exp3Update(std::move(learners[i]), profile[i], reward);
    }
    history.actions.push_back(profile);
    history.payoffs.push_back(std::move(payoffs));
    history.strategies.push_back(std::move(strategies));
  }
  return history;
}

namespace {

void CheckHistory(const PlayHistory& history, const FiniteGame& game, int player) {
  if (player < 0 || player >= game.num_players()) {
    throw DimensionError("player index out of range");
  }
  for (const auto& a : history.actions) {
    if (static_cast<int>(a.size()) != game.num_players()) {
      throw DimensionError("history does not match the game");
    }
  }
}

}  // namespace

double ExternalRegret(const PlayHistory& history, const FiniteGame& game, int player) {
  CheckHistory(history, game, player);
  const int k = game.action_counts()[player];
  std::vector<double> fixed(k, 0.0);
  double realized = 0.0;
  for (int t = 0; t < history.rounds(); ++t) {
    std::vector<int> profile = history.actions[t];
    realized += game.Payoff(player, profile);
    for (int a = 0; a < k; ++a) {
      profile[player] = a;
      fixed[a] += game.Payoff(player, profile);
    }
  }
  return *std::max_element(fixed.begin(), fixed.end()) - realized;
}

std::vector<double> RegretCurve(const PlayHistory& history, const FiniteGame& game,
                                int player) {
  CheckHistory(history, game, player);
  const int k = game.action_counts()[player];
  std::vector<double> fixed(k, 0.0);
  double realized = 0.0;
  std::vector<double> curve;
  curve.reserve(history.rounds());
  for (int t = 0; t < history.rounds(); ++t) {
    std::vector<int> profile = history.actions[t];
    realized += game.Payoff(player, profile);
    for (int a = 0; a < k; ++a) {
      profile[player] = a;
      fixed[a] += game.Payoff(player, profile);
    }
    curve.push_back(*std::max_element(fixed.begin(), fixed.end()) - realized);
  }
  return curve;
}

Vector AverageStrategy(const PlayHistory& history, int player) {
  if (history.rounds() == 0) throw ParameterError("empty history");
  const int k = static_cast<int>(history.strategies[0][player].size());
  Vector avg = Vector::Zero(k);
  for (const auto& round : history.strategies) {
    for (int a = 0; a < k; ++a) avg[a] += round[player][a];
  }
  return avg / history.rounds();
}

}  // namespace gdl
