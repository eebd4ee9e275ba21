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

#include "gdl/catalog.h"

#include <cmath>

namespace gdl {

namespace {

double Scalar(const GameParams& params, const std::string& key) {
  const auto& v = params.at(key);
  if (v.size() != 1) throw ParameterError("parameter '" + key + "' must be a scalar");
  if (!std::isfinite(v[0])) throw ParameterError("parameter '" + key + "' must be finite");
  return v[0];
}

GameParams Merge(const std::string& name, const GameParams& params) {
  GameParams merged = DefaultBuiltinParams(name);
  for (const auto& [key, value] : params) {
    if (!merged.count(key)) {
      throw ParameterError("builtin '" + name + "' has no parameter '" + key + "'");
    }
    merged[key] = value;
  }
  return merged;
}

Game FromMatrices(const std::string& name, const GameParams& params, Matrix a1,
                  Matrix a2, std::vector<std::string> labels) {
  FiniteGame game(BimatrixGame(std::move(a1), std::move(a2)));
  if (!labels.empty()) game.set_action_labels({labels, labels});
  return Game(std::move(game), name, params);
}

Game Tullock(const GameParams& params) {
  const double prize = Scalar(params, "V");
  const double r = Scalar(params, "r");
  const double eps = Scalar(params, "eps");
  if (prize <= 0.0) throw ParameterError("tullock requires V > 0");
  if (r <= 0.0) throw ParameterError("tullock requires r > 0");
  if (eps <= 0.0 || eps >= prize) throw ParameterError("tullock requires 0 < eps < V");

  auto utility = [prize, r](int i, const Vector& x) {
    const double own = std::pow(x[i], r);
    const double other = std::pow(x[1 - i], r);
    return prize * own / (own + other) - x[i];
  };
  auto gradient = [prize, r](const Vector& x) {
    Vector g(2);
    const double p0 = std::pow(x[0], r);
    const double p1 = std::pow(x[1], r);
    const double s = p0 + p1;
    g[0] = prize * r * std::pow(x[0], r - 1) * p1 / (s * s) - 1.0;
    g[1] = prize * r * std::pow(x[1], r - 1) * p0 / (s * s) - 1.0;
    return g;
  };
  auto jacobian = [prize, r](const Vector& x) {
    Matrix j(2, 2);
    const double p0 = std::pow(x[0], r);
    const double p1 = std::pow(x[1], r);
    const double s = p0 + p1;
    const double s3 = s * s * s;
    j(0, 0) = prize * r * p1 * std::pow(x[0], r - 2) * ((r - 1) * s - 2 * r * p0) / s3;
    j(1, 1) = prize * r * p0 * std::pow(x[1], r - 2) * ((r - 1) * s - 2 * r * p1) / s3;
    const double cross = prize * r * r * std::pow(x[0], r - 1) * std::pow(x[1], r - 1) / s3;
    j(0, 1) = cross * (p0 - p1);
    j(1, 0) = cross * (p1 - p0);
    return j;
  };
  ContinuousGame game({1, 1}, {{eps, prize}, {eps, prize}}, gradient, jacobian, utility);
  return Game(std::move(game), "tullock", params);
}

Game Spiral(const GameParams& params) {
  const double c = Scalar(params, "C");
  if (c <= 0.0) throw ParameterError("spiral requires C > 0");
  Matrix jac(2, 2);
  jac << -1.0, -4.0, 1.0, -0.5;
  auto utility = [](int i, const Vector& x) {
    return i == 0 ? -0.5 * x[0] * x[0] - 4.0 * x[0] * x[1]
                  : -0.25 * x[1] * x[1] + x[0] * x[1];
  };
  auto gradient = [jac](const Vector& x) -> Vector { return jac * x; };
  auto jacobian = [jac](const Vector&) { return jac; };
  ContinuousGame game({1, 1}, {{-c, c}, {-c, c}}, gradient, jacobian, utility);
  game.set_constant_jacobian(true);
  return Game(std::move(game), "spiral", params);
}

Game Cournot(const GameParams& params) {
  const double b0 = Scalar(params, "b0");
  const double upper = Scalar(params, "upper");
  const std::vector<double> b = params.at("b");
  const std::vector<double> c = params.at("c");
  if (b.empty()) throw ParameterError("cournot requires at least one firm");
  if (c.size() != b.size()) throw ParameterError("cournot requires one cost per firm");
  for (double v : b) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ParameterError("cournot requires b_i > 0");
  }
  for (double v : c) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw ParameterError("cournot requires c_i >= 0");
  }
  if (!(upper > 0.0)) throw ParameterError("cournot requires upper > 0");
  const int n = static_cast<int>(b.size());
  // u_i = a_i (b0 - sum_j b_j a_j) - c_i a_i, so
  // F_i = b0 - sum_j b_j a_j - b_i a_i - c_i and J_ij = -b_j - [i == j] b_i.
  Matrix jac(n, n);
  Vector offset(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) jac(i, j) = -b[j] - (i == j ? b[i] : 0.0);
    offset[i] = b0 - c[i];
  }
  auto utility = [b0, b, c](int i, const Vector& a) {
    double price = b0;
    for (std::size_t j = 0; j < b.size(); ++j) price -= b[j] * a[j];
    return a[i] * price - c[i] * a[i];
  };
  auto gradient = [jac, offset](const Vector& a) -> Vector { return offset + jac * a; };
  auto jacobian = [jac](const Vector&) { return jac; };
  ContinuousGame game(std::vector<int>(n, 1), std::vector<Interval>(n, {0.0, upper}),
                      gradient, jacobian, utility);
  game.set_constant_jacobian(true);
  return Game(std::move(game), "cournot", params);
}

Matrix Rows(int m, int n, std::initializer_list<double> entries) {
  Matrix a(m, n);
  auto it = entries.begin();
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k < n; ++k) a(r, k) = *it++;
  }
  return a;
}

Game Build(const std::string& name, const GameParams& p) {
  if (name == "tullock") return Tullock(p);
  if (name == "spiral") return Spiral(p);
  if (name == "cournot") return Cournot(p);
  if (name == "prisoners_dilemma") {
    return FromMatrices(name, p, Rows(2, 2, {3, 0, 5, 1}), Rows(2, 2, {3, 5, 0, 1}),
                        {"S1", "S2"});
  }
  if (name == "battle_of_sexes") {
    return FromMatrices(name, p, Rows(2, 2, {3, 0, 0, 2}), Rows(2, 2, {2, 0, 0, 3}),
                        {"opera", "football"});
  }
  if (name == "matching_pennies") {
    Matrix a1 = Rows(2, 2, {1, -1, -1, 1});
    Matrix a2 = -a1.transpose();
    return FromMatrices(name, p, a1, a2, {"H", "T"});
  }
  if (name == "extended_matching_pennies") {
    const double r = Scalar(p, "r");
    const double q = Scalar(p, "q");
    if (!(r > 0.0)) throw ParameterError("extended_matching_pennies requires r > 0");
    if (!(q > 1.0)) throw ParameterError("extended_matching_pennies requires q > 1");
    Matrix a1 = Rows(3, 3, {r, -q, -q, -q / 2, 1, -1, -q / 2, -1, 1});
    Matrix a2 = Rows(3, 3, {r, -q / 2, -q / 2, -q, -1, 1, -q, 1, -1});
    return FromMatrices(name, p, a1, a2, {});
  }
  if (name == "milionis_cycle") {
    return FromMatrices(name, p, Rows(3, 3, {1, 0, -1, -1, 0, -1, 1, 0, -2}),
                        Rows(3, 3, {1, -1, 1, 0, 0, 0, -1, -1, 2}), {});
  }
  if (name == "weak_pne_cycle") {
    return FromMatrices(name, p, Rows(3, 3, {1, 2, 3, 0, 2, 0, 3, 2, 1}),
                        Rows(3, 3, {3, 0, 1, 1, 2, 2, 1, 0, 3}), {});
  }
  throw ParameterError("unknown builtin game '" + name + "'");
}

}  // namespace

const std::vector<std::string>& BuiltinNames() {
  static const std::vector<std::string> names = {
      "tullock",          "spiral",          "cournot",
      "prisoners_dilemma", "battle_of_sexes", "matching_pennies",
      "extended_matching_pennies", "milionis_cycle", "weak_pne_cycle"};
  return names;
}

GameParams DefaultBuiltinParams(const std::string& name) {
  if (name == "tullock") return {{"V", {1.0}}, {"r", {2.0}}, {"eps", {1e-3}}};
  if (name == "spiral") return {{"C", {1.0}}};
  if (name == "cournot") {
    return {{"b0", {1.0}}, {"b", {0.5, 0.5}}, {"c", {0.0, 0.0}}, {"upper", {1.0}}};
  }
  if (name == "extended_matching_pennies") return {{"r", {1.0}}, {"q", {2.0}}};
  for (const std::string& known : BuiltinNames()) {
    if (known == name) return {};
  }
  throw ParameterError("unknown builtin game '" + name + "'");
}

Game LoadBuiltin(const std::string& name, const GameParams& params) {
  Game game = Build(name, Merge(name, params));
  game.set_builtin(true);
  return game;
}

}  // namespace gdl
