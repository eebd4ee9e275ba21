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

#ifndef GDL_GAME_MODELS_H_
#define GDL_GAME_MODELS_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gdl/common.h"
#include "gdl/projection.h"

namespace gdl {

// Two-player game in matrix form: u1 = x1' A1 x2 and u2 = x1' A2 x2.
struct BimatrixGame {
  Matrix A1;
  Matrix A2;

  BimatrixGame(Matrix a1, Matrix a2);
};

// Normal-form game with dense payoff tensors. Profiles are stored row-major
// with player 0's action as the most significant digit.
class FiniteGame {
 public:
  // payoffs[i] holds player i's payoff for every profile in row-major order.
  FiniteGame(std::vector<int> action_counts,
             std::vector<std::vector<double>> payoffs);
  explicit FiniteGame(const BimatrixGame& game);

  int num_players() const { return static_cast<int>(action_counts_.size()); }
  const std::vector<int>& action_counts() const { return action_counts_; }
  std::int64_t num_profiles() const { return num_profiles_; }
  int total_dimension() const { return feasible_set_.dimension(); }
  const FeasibleSet& feasible_set() const { return feasible_set_; }
  const std::vector<std::vector<double>>& payoffs() const { return payoffs_; }

  // Optional per-player action labels and numeric action values (the latter
  // are set by discretization).
  const std::vector<std::vector<std::string>>& action_labels() const {
    return labels_;
  }
  void set_action_labels(std::vector<std::vector<std::string>> labels);
  const std::vector<std::vector<double>>& action_values() const {
    return values_;
  }
  void set_action_values(std::vector<std::vector<double>> values);

  std::int64_t ProfileIndex(const std::vector<int>& profile) const;
  std::vector<int> ProfileFromIndex(std::int64_t index) const;
  double Payoff(int player, const std::vector<int>& profile) const;
  double Payoff(int player, std::int64_t index) const {
    return payoffs_[player][index];
  }
  double MinPayoff() const;
  double MaxPayoff() const;

  // Present when the game has two players.
  const std::optional<BimatrixGame>& bimatrix() const { return bimatrix_; }

  // Mixed extension on the stacked profile x (no domain check).
  double Utility(int player, const Vector& x) const;
  Vector Gradient(const Vector& x) const;
  Matrix Jacobian(const Vector& x) const;

  // Stacked point of the pure profile.
  Vector PureProfilePoint(const std::vector<int>& profile) const;

 private:
  std::vector<int> action_counts_;
  std::vector<std::vector<double>> payoffs_;
  std::vector<std::int64_t> strides_;
  std::int64_t num_profiles_ = 0;
  FeasibleSet feasible_set_;
  std::optional<BimatrixGame> bimatrix_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<double>> values_;
};

// Point on a product of simplices, one block per player.
class MixedProfile {
 public:
  // Validates blocks; entries off the simplex by less than 1e-9 are
  // renormalized, larger violations throw DomainError.
  explicit MixedProfile(std::vector<Vector> blocks);
  static MixedProfile FromStacked(const Vector& x, const std::vector<int>& sizes);
  static MixedProfile Uniform(const std::vector<int>& sizes);

  const std::vector<Vector>& blocks() const { return blocks_; }
  const Vector& block(int i) const { return blocks_[i]; }
  int num_players() const { return static_cast<int>(blocks_.size()); }
  std::vector<int> sizes() const;
  Vector Stacked() const;

 private:
  std::vector<Vector> blocks_;
};

using GradientOracle = std::function<Vector(const Vector&)>;
using JacobianOracle = std::function<Matrix(const Vector&)>;
using UtilityOracle = std::function<double(int, const Vector&)>;

// Game with box-constrained continuous strategies.
class ContinuousGame {
 public:
  ContinuousGame(std::vector<int> dims, std::vector<Interval> domain,
                 GradientOracle gradient, JacobianOracle jacobian = nullptr,
                 UtilityOracle utility = nullptr);

  int num_players() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  int total_dimension() const { return feasible_set_.dimension(); }
  const FeasibleSet& feasible_set() const { return feasible_set_; }
  bool has_jacobian() const { return static_cast<bool>(jacobian_); }
  bool has_utility() const { return static_cast<bool>(utility_); }
  // True when J does not depend on x (linear gradient).
  bool constant_jacobian() const { return constant_jacobian_; }
  void set_constant_jacobian(bool value) { constant_jacobian_ = value; }

  // Unchecked oracle calls. The Jacobian falls back to central differences.
  Vector Gradient(const Vector& x) const;
  Matrix Jacobian(const Vector& x) const;
  double Utility(int player, const Vector& x) const;

 private:
  std::vector<int> dims_;
  FeasibleSet feasible_set_;
  GradientOracle gradient_;
  JacobianOracle jacobian_;
  UtilityOracle utility_;
  bool constant_jacobian_ = false;
};

// Parameters of a game as named real vectors; scalars have length one.
using GameParams = std::map<std::string, std::vector<double>>;

// A finite game (through its mixed extension) or a continuous game, together
// with an identifier for reporting.
class Game {
 public:
  Game(FiniteGame game, std::string name = "finite", GameParams params = {});
  Game(ContinuousGame game, std::string name, GameParams params = {});

  bool is_finite() const { return std::holds_alternative<FiniteGame>(impl_); }
  const FiniteGame& finite() const;
  const ContinuousGame& continuous() const;
  const std::string& name() const { return name_; }
  const GameParams& params() const { return params_; }
  // True for games built by LoadBuiltin; they serialize by name and params.
  bool is_builtin() const { return builtin_; }
  void set_builtin(bool value) { builtin_ = value; }
  const FeasibleSet& feasible_set() const;
  int dimension() const { return feasible_set().dimension(); }
  int num_players() const;
  // Stacked coordinate range owned by each player.
  std::vector<int> player_dims() const;
  // Jacobian independent of x (bilinear mixed extensions and linear fields).
  bool constant_jacobian() const;

  // Unchecked oracles for hot loops; x must be feasible.
  Vector Gradient(const Vector& x) const;
  Matrix Jacobian(const Vector& x) const;
  double Utility(int player, const Vector& x) const;
  bool has_utility() const;

 private:
  std::variant<FiniteGame, ContinuousGame> impl_;
  std::string name_;
  GameParams params_;
  bool builtin_ = false;
};

// Σ_a u_i(a) Π_j x_{j,a_j}; throws DimensionError on shape mismatch.
double ExpectedUtility(const FiniteGame& game, const MixedProfile& x, int player);

// Domain-checked oracles.
Vector GameGradient(const Game& game, const Vector& x);
Matrix GameJacobian(const Game& game, const Vector& x);

// Central differences of a vector field with step h.
Matrix FiniteDifferenceJacobian(const GradientOracle& field, const Vector& x,
                                double h = kFiniteDifferenceStep);

// Grid of `points_per_dim` values per player over each interval, including
// both endpoints. Requires a utility oracle and one dimension per player.
FiniteGame Discretize(const ContinuousGame& game, int points_per_dim);

struct SymmetryReport {
  bool potential_candidate = false;
  double max_asymmetry = 0.0;
  int samples = 0;
};
// Symmetry of J at sampled feasible points; a symmetric Jacobian makes the
// game a potential-game candidate.
SymmetryReport CheckPotentialCandidate(const Game& game, int n_samples,
                                       std::uint64_t seed);

struct ComplementsReport {
  bool strategic_complements = false;
  double min_cross_derivative = 0.0;
  int samples = 0;
};
// Off-diagonal blocks of J at sampled points; complements when every sampled
// cross derivative is at least -1e-10.
ComplementsReport CheckStrategicComplements(const Game& game, int n_samples,
                                            std::uint64_t seed);

}  // namespace gdl

#endif  // GDL_GAME_MODELS_H_
