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

#include "gdl/game_models.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gdl/rng.h"

namespace gdl {

BimatrixGame::BimatrixGame(Matrix a1, Matrix a2) : A1(std::move(a1)), A2(std::move(a2)) {
  if (A1.rows() != A2.rows() || A1.cols() != A2.cols()) {
    throw DimensionError("bimatrix payoff matrices must have the same shape");
  }
  if (A1.size() == 0) throw DimensionError("bimatrix game needs at least one action");
  if (!A1.allFinite() || !A2.allFinite()) {
    throw ParameterError("bimatrix payoffs must be finite");
  }
}

namespace {

std::vector<std::vector<double>> BimatrixPayoffs(const BimatrixGame& game) {
  const Eigen::Index m = game.A1.rows();
  const Eigen::Index n = game.A1.cols();
  std::vector<std::vector<double>> payoffs(2, std::vector<double>(m * n));
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      payoffs[0][a * n + b] = game.A1(a, b);
      payoffs[1][a * n + b] = game.A2(a, b);
    }
  }
  return payoffs;
}

}  // namespace

FiniteGame::FiniteGame(std::vector<int> action_counts,
                       std::vector<std::vector<double>> payoffs)
    : action_counts_(std::move(action_counts)), payoffs_(std::move(payoffs)) {
  if (action_counts_.empty()) throw DimensionError("game needs at least one player");
  num_profiles_ = 1;
  for (int d : action_counts_) {
    if (d < 1) throw DimensionError("every player needs at least one action");
    if (num_profiles_ > std::numeric_limits<std::int64_t>::max() / d) {
      throw DimensionError("profile count overflows");
    }
    num_profiles_ *= d;
  }
  if (payoffs_.size() != action_counts_.size()) {
    throw DimensionError("expected one payoff tensor per player, got " +
                         std::to_string(payoffs_.size()));
  }
  for (std::size_t i = 0; i < payoffs_.size(); ++i) {
    if (static_cast<std::int64_t>(payoffs_[i].size()) != num_profiles_) {
      throw DimensionError("payoff tensor of player " + std::to_string(i) +
                           " has " + std::to_string(payoffs_[i].size()) +
                           " entries, expected " + std::to_string(num_profiles_));
    }
    for (double v : payoffs_[i]) {
      if (!std::isfinite(v)) throw ParameterError("payoff entries must be finite");
    }
  }
  strides_.assign(action_counts_.size(), 1);
  for (int i = num_players() - 2; i >= 0; --i) {
    strides_[i] = strides_[i + 1] * action_counts_[i + 1];
  }
  feasible_set_ = FeasibleSet::SimplexProduct(action_counts_);
  if (num_players() == 2) {
    const int m = action_counts_[0];
    const int n = action_counts_[1];
    Matrix a1(m, n), a2(m, n);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < n; ++b) {
        a1(a, b) = payoffs_[0][a * n + b];
        a2(a, b) = payoffs_[1][a * n + b];
      }
    }
    bimatrix_.emplace(std::move(a1), std::move(a2));
  }
}

FiniteGame::FiniteGame(const BimatrixGame& game)
    : FiniteGame({static_cast<int>(game.A1.rows()), static_cast<int>(game.A1.cols())},
                 BimatrixPayoffs(game)) {}

void FiniteGame::set_action_labels(std::vector<std::vector<std::string>> labels) {
  if (!labels.empty()) {
    if (labels.size() != action_counts_.size()) {
      throw DimensionError("expected action labels for every player");
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (static_cast<int>(labels[i].size()) != action_counts_[i]) {
        throw DimensionError("player " + std::to_string(i) + " has " +
                             std::to_string(action_counts_[i]) + " actions but " +
                             std::to_string(labels[i].size()) + " labels");
      }
    }
  }
  labels_ = std::move(labels);
}

void FiniteGame::set_action_values(std::vector<std::vector<double>> values) {
  if (!values.empty()) {
    if (values.size() != action_counts_.size()) {
      throw DimensionError("expected action values for every player");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (static_cast<int>(values[i].size()) != action_counts_[i]) {
        throw DimensionError("action value count mismatch");
      }
    }
  }
  values_ = std::move(values);
}

std::int64_t FiniteGame::ProfileIndex(const std::vector<int>& profile) const {
  if (profile.size() != action_counts_.size()) {
    throw DimensionError("profile has " + std::to_string(profile.size()) +
                         " entries, expected " + std::to_string(num_players()));
  }
  std::int64_t index = 0;
  for (int i = 0; i < num_players(); ++i) {
    if (profile[i] < 0 || profile[i] >= action_counts_[i]) {
      throw DimensionError("action index out of range for player " +
                           std::to_string(i));
    }
    index += profile[i] * strides_[i];
  }
  return index;
}

std::vector<int> FiniteGame::ProfileFromIndex(std::int64_t index) const {
  std::vector<int> profile(action_counts_.size());
  for (int i = 0; i < num_players(); ++i) {
    profile[i] = static_cast<int>(index / strides_[i]);
    index %= strides_[i];
  }
  return profile;
}

double FiniteGame::Payoff(int player, const std::vector<int>& profile) const {
  return payoffs_.at(player)[ProfileIndex(profile)];
}

double FiniteGame::MinPayoff() const {
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& p : payoffs_) lo = std::min(lo, *std::min_element(p.begin(), p.end()));
  return lo;
}

double FiniteGame::MaxPayoff() const {
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& p : payoffs_) hi = std::max(hi, *std::max_element(p.begin(), p.end()));
  return hi;
}

Vector FiniteGame::PureProfilePoint(const std::vector<int>& profile) const {
  ProfileIndex(profile);
  Vector x = Vector::Zero(total_dimension());
  for (int i = 0; i < num_players(); ++i) {
    x[feasible_set_.block_offsets()[i] + profile[i]] = 1.0;
  }
  return x;
}

double FiniteGame::Utility(int player, const Vector& x) const {
  if (player < 0 || player >= num_players()) {
    throw DimensionError("player index out of range");
  }
  const auto& offsets = feasible_set_.block_offsets();
  if (bimatrix_) {
    const Matrix& a = player == 0 ? bimatrix_->A1 : bimatrix_->A2;
    return x.segment(offsets[0], action_counts_[0]).dot(
        a * x.segment(offsets[1], action_counts_[1]));
  }
  const auto& u = payoffs_[player];
  double total = 0.0;
  std::vector<int> profile(num_players(), 0);
  for (std::int64_t idx = 0; idx < num_profiles_; ++idx) {
    double weight = 1.0;
    for (int j = 0; j < num_players(); ++j) weight *= x[offsets[j] + profile[j]];
    total += u[idx] * weight;
    for (int j = num_players() - 1; j >= 0; --j) {
      if (++profile[j] < action_counts_[j]) break;
      profile[j] = 0;
    }
  }
  return total;
}

Vector FiniteGame::Gradient(const Vector& x) const {
  const auto& offsets = feasible_set_.block_offsets();
  Vector g = Vector::Zero(total_dimension());
  if (bimatrix_) {
    const int m = action_counts_[0];
    const int n = action_counts_[1];
    g.head(m).noalias() = bimatrix_->A1 * x.segment(m, n);
    g.tail(n).noalias() = bimatrix_->A2.transpose() * x.head(m);
    return g;
  }
  const int np = num_players();
  std::vector<int> profile(np, 0);
  std::vector<double> prefix(np + 1), suffix(np + 1);
  for (std::int64_t idx = 0; idx < num_profiles_; ++idx) {
    prefix[0] = 1.0;
    for (int j = 0; j < np; ++j) prefix[j + 1] = prefix[j] * x[offsets[j] + profile[j]];
    suffix[np] = 1.0;
    for (int j = np - 1; j >= 0; --j) suffix[j] = suffix[j + 1] * x[offsets[j] + profile[j]];
    for (int i = 0; i < np; ++i) {
      g[offsets[i] + profile[i]] += payoffs_[i][idx] * prefix[i] * suffix[i + 1];
    }
    for (int j = np - 1; j >= 0; --j) {
      if (++profile[j] < action_counts_[j]) break;
      profile[j] = 0;
    }
  }
  return g;
}

Matrix FiniteGame::Jacobian(const Vector& x) const {
  const auto& offsets = feasible_set_.block_offsets();
  const int dim = total_dimension();
  Matrix jac = Matrix::Zero(dim, dim);
  if (bimatrix_) {
    const int m = action_counts_[0];
    const int n = action_counts_[1];
    jac.block(0, m, m, n) = bimatrix_->A1;
    jac.block(m, 0, n, m) = bimatrix_->A2.transpose();
    return jac;
  }
  const int np = num_players();
  std::vector<int> profile(np, 0);
  for (std::int64_t idx = 0; idx < num_profiles_; ++idx) {
    for (int i = 0; i < np; ++i) {
      for (int j = 0; j < np; ++j) {
        if (i == j) continue;
        double weight = payoffs_[i][idx];
        for (int m = 0; m < np; ++m) {
          if (m != i && m != j) weight *= x[offsets[m] + profile[m]];
        }
        jac(offsets[i] + profile[i], offsets[j] + profile[j]) += weight;
      }
    }
    for (int j = np - 1; j >= 0; --j) {
      if (++profile[j] < action_counts_[j]) break;
      profile[j] = 0;
    }
  }
  return jac;
}

MixedProfile::MixedProfile(std::vector<Vector> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw DimensionError("mixed profile needs at least one block");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    Vector& b = blocks_[i];
    if (b.size() == 0) throw DimensionError("mixed profile block is empty");
    if (!b.allFinite()) throw DomainError("mixed profile entries must be finite");
    const double violation =
        std::max({-b.minCoeff(), b.maxCoeff() - 1.0, std::abs(b.sum() - 1.0), 0.0});
    if (violation > 1e-9) {
      throw DomainError("block " + std::to_string(i) + " " + FormatVector(b) +
                        " is not a probability vector");
    }
    if (violation > 0.0) {
      b = b.cwiseMax(0.0);
      b /= b.sum();
    }
  }
}

MixedProfile MixedProfile::FromStacked(const Vector& x, const std::vector<int>& sizes) {
  int total = 0;
  for (int s : sizes) total += s;
  if (total != x.size()) {
    throw DimensionError("stacked profile has dimension " + std::to_string(x.size()) +
                         ", expected " + std::to_string(total));
  }
  std::vector<Vector> blocks;
  int offset = 0;
  for (int s : sizes) {
    blocks.push_back(x.segment(offset, s));
    offset += s;
  }
  return MixedProfile(std::move(blocks));
}

MixedProfile MixedProfile::Uniform(const std::vector<int>& sizes) {
  std::vector<Vector> blocks;
  for (int s : sizes) blocks.push_back(Vector::Constant(s, 1.0 / s));
  return MixedProfile(std::move(blocks));
}

std::vector<int> MixedProfile::sizes() const {
  std::vector<int> out;
  for (const Vector& b : blocks_) out.push_back(static_cast<int>(b.size()));
  return out;
}

Vector MixedProfile::Stacked() const {
  int total = 0;
  for (const Vector& b : blocks_) total += static_cast<int>(b.size());
  Vector x(total);
  int offset = 0;
  for (const Vector& b : blocks_) {
    x.segment(offset, b.size()) = b;
    offset += static_cast<int>(b.size());
  }
  return x;
}

ContinuousGame::ContinuousGame(std::vector<int> dims, std::vector<Interval> domain,
                               GradientOracle gradient, JacobianOracle jacobian,
                               UtilityOracle utility)
    : dims_(std::move(dims)),
      feasible_set_(FeasibleSet::Box(std::move(domain))),
      gradient_(std::move(gradient)),
      jacobian_(std::move(jacobian)),
      utility_(std::move(utility)) {
  int total = 0;
  for (int d : dims_) {
    if (d < 1) throw DimensionError("player dimension must be positive");
    total += d;
  }
  if (total != feasible_set_.dimension()) {
    throw DimensionError("domain has " + std::to_string(feasible_set_.dimension()) +
                         " coordinates but player dimensions sum to " +
                         std::to_string(total));
  }
  if (!gradient_) throw ParameterError("continuous game requires a gradient oracle");
}

Vector ContinuousGame::Gradient(const Vector& x) const {
  Vector g = gradient_(x);
  if (g.size() != total_dimension()) {
    throw DimensionError("gradient oracle returned " + std::to_string(g.size()) +
                         " entries, expected " + std::to_string(total_dimension()));
  }
  if (!g.allFinite()) {
    throw NumericalError("gradient is not finite at " + FormatVector(x));
  }
  return g;
}

Matrix ContinuousGame::Jacobian(const Vector& x) const {
  if (jacobian_) return jacobian_(x);
  return FiniteDifferenceJacobian(gradient_, x);
}

double ContinuousGame::Utility(int player, const Vector& x) const {
  if (!utility_) throw ParameterError("game has no utility oracle");
  if (player < 0 || player >= num_players()) {
    throw DimensionError("player index out of range");
  }
  return utility_(player, x);
}

Game::Game(FiniteGame game, std::string name, GameParams params)
    : impl_(std::move(game)), name_(std::move(name)), params_(std::move(params)) {}

Game::Game(ContinuousGame game, std::string name, GameParams params)
    : impl_(std::move(game)), name_(std::move(name)), params_(std::move(params)) {}

const FiniteGame& Game::finite() const {
  if (!is_finite()) throw ParameterError("game '" + name_ + "' is not a finite game");
  return std::get<FiniteGame>(impl_);
}

const ContinuousGame& Game::continuous() const {
  if (is_finite()) throw ParameterError("game '" + name_ + "' is not a continuous game");
  return std::get<ContinuousGame>(impl_);
}

const FeasibleSet& Game::feasible_set() const {
  return std::visit([](const auto& g) -> const FeasibleSet& { return g.feasible_set(); },
                    impl_);
}

int Game::num_players() const {
  return std::visit([](const auto& g) { return g.num_players(); }, impl_);
}

std::vector<int> Game::player_dims() const {
  if (is_finite()) return finite().action_counts();
  return continuous().dims();
}

bool Game::constant_jacobian() const {
  if (is_finite()) return finite().num_players() == 2;
  return continuous().constant_jacobian();
}

Vector Game::Gradient(const Vector& x) const {
  return std::visit([&x](const auto& g) { return g.Gradient(x); }, impl_);
}

Matrix Game::Jacobian(const Vector& x) const {
  return std::visit([&x](const auto& g) { return g.Jacobian(x); }, impl_);
}

double Game::Utility(int player, const Vector& x) const {
  return std::visit([&](const auto& g) { return g.Utility(player, x); }, impl_);
}

bool Game::has_utility() const {
  return is_finite() || continuous().has_utility();
}

double ExpectedUtility(const FiniteGame& game, const MixedProfile& x, int player) {
  if (x.sizes() != game.action_counts()) {
    throw DimensionError("mixed profile shape does not match the game");
  }
  if (player < 0 || player >= game.num_players()) {
    throw DimensionError("player index out of range");
  }
  return game.Utility(player, x.Stacked());
}

Vector GameGradient(const Game& game, const Vector& x) {
  game.feasible_set().CheckContains(x, "gradient argument");
  return game.Gradient(x);
}

Matrix GameJacobian(const Game& game, const Vector& x) {
  game.feasible_set().CheckContains(x, "Jacobian argument");
  return game.Jacobian(x);
}

Matrix FiniteDifferenceJacobian(const GradientOracle& field, const Vector& x, double h) {
  const Eigen::Index n = x.size();
  Matrix jac(n, n);
  Vector xp = x, xm = x;
  for (Eigen::Index j = 0; j < n; ++j) {
    xp[j] = x[j] + h;
    xm[j] = x[j] - h;
    jac.col(j) = (field(xp) - field(xm)) / (2.0 * h);
    xp[j] = x[j];
    xm[j] = x[j];
  }
  return jac;
}

FiniteGame Discretize(const ContinuousGame& game, int points_per_dim) {
  if (points_per_dim < 2) throw ParameterError("discretization needs at least 2 points");
  if (!game.has_utility()) {
    throw ParameterError("discretization requires a utility oracle");
  }
  for (int d : game.dims()) {
    if (d != 1) throw ParameterError("discretization supports one dimension per player");
  }
  const int n = game.num_players();
  std::vector<std::vector<double>> values(n);
  std::vector<std::vector<std::string>> labels(n);
  for (int i = 0; i < n; ++i) {
    const Interval iv = game.feasible_set().bounds()[i];
    for (int k = 0; k < points_per_dim; ++k) {
      const double t = static_cast<double>(k) / (points_per_dim - 1);
      const double v = k == points_per_dim - 1 ? iv.hi : iv.lo + (iv.hi - iv.lo) * t;
      values[i].push_back(v);
      labels[i].push_back(FormatDouble(v));
    }
  }
  std::vector<int> counts(n, points_per_dim);
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total *= points_per_dim;
  std::vector<std::vector<double>> payoffs(n, std::vector<double>(total));
  std::vector<int> profile(n, 0);
  Vector point(n);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    for (int i = 0; i < n; ++i) point[i] = values[i][profile[i]];
    for (int i = 0; i < n; ++i) payoffs[i][idx] = game.Utility(i, point);
    for (int j = n - 1; j >= 0; --j) {
      if (++profile[j] < points_per_dim) break;
      profile[j] = 0;
    }
  }
  FiniteGame out(counts, std::move(payoffs));
  out.set_action_values(std::move(values));
  out.set_action_labels(std::move(labels));
  return out;
}

SymmetryReport CheckPotentialCandidate(const Game& game, int n_samples,
                                       std::uint64_t seed) {
  Rng rng(seed);
  SymmetryReport report;
  for (int s = 0; s < n_samples; ++s) {
    const Matrix jac = game.Jacobian(game.feasible_set().Sample(rng));
    const double scale = 1.0 + jac.cwiseAbs().maxCoeff();
    report.max_asymmetry =
        std::max(report.max_asymmetry, (jac - jac.transpose()).cwiseAbs().maxCoeff() / scale);
    ++report.samples;
  }
  report.potential_candidate = report.max_asymmetry <= 1e-8;
  return report;
}

ComplementsReport CheckStrategicComplements(const Game& game, int n_samples,
                                            std::uint64_t seed) {
  Rng rng(seed);
  ComplementsReport report;
  report.min_cross_derivative = std::numeric_limits<double>::infinity();
  const std::vector<int> dims = game.player_dims();
  std::vector<int> owner;
  for (int i = 0; i < static_cast<int>(dims.size()); ++i) {
    for (int k = 0; k < dims[i]; ++k) owner.push_back(i);
  }
  for (int s = 0; s < n_samples; ++s) {
    const Matrix jac = game.Jacobian(game.feasible_set().Sample(rng));
    for (Eigen::Index r = 0; r < jac.rows(); ++r) {
      for (Eigen::Index c = 0; c < jac.cols(); ++c) {
        if (owner[r] != owner[c]) {
          report.min_cross_derivative = std::min(report.min_cross_derivative, jac(r, c));
        }
      }
    }
    ++report.samples;
  }
  report.strategic_complements = report.min_cross_derivative >= -1e-10;
  return report;
}

}  // namespace gdl
