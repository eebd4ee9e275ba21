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

#include "gdl/dynamics.h"

#include <gtest/gtest.h>

#include <cmath>

#include "gdl/catalog.h"
#include "gdl/rng.h"

namespace gdl {
namespace {

Vector Vec(std::initializer_list<double> values) {
  Vector v(static_cast<int>(values.size()));
  int k = 0;
  for (double x : values) v[k++] = x;
  return v;
}

SimulationConfig Discrete(double eta, int horizon) {
  SimulationConfig config;
  config.step_size = eta;
  config.horizon = horizon;
  return config;
}

SimulationConfig Continuous(double final_time, double h = 1e-3, double eta = 0.05) {
  SimulationConfig config;
  config.step_size = eta;
  config.final_time = final_time;
  config.integrator_step = h;
  return config;
}

TEST(SimulationConfig, Validation) {
  SimulationConfig config;
  EXPECT_NO_THROW(config.Validate());
  config.step_size = 0.0;
  EXPECT_THROW(config.Validate(), ParameterError);
  config = SimulationConfig();
  config.horizon = 0;
  EXPECT_THROW(config.Validate(), ParameterError);
  config = SimulationConfig();
  config.integrator_step = -1e-3;
  EXPECT_THROW(config.Validate(), ParameterError);
  config = SimulationConfig();
  config.stop_tolerance = 0.0;
  EXPECT_THROW(config.Validate(), ParameterError);
}

TEST(StepDiscrete, EquilibriaAreFixedPoints) {
  const std::vector<std::pair<std::string, Vector>> equilibria = {
      {"tullock", Vec({0.5, 0.5})},
      {"spiral", Vec({0, 0})},
      {"cournot", Vec({2.0 / 3.0, 2.0 / 3.0})},
      {"prisoners_dilemma", Vec({0, 1, 0, 1})},
      {"battle_of_sexes", Vec({1, 0, 1, 0})},
      {"battle_of_sexes", Vec({0, 1, 0, 1})},
      {"battle_of_sexes", Vec({0.6, 0.4, 0.4, 0.6})},
      {"matching_pennies", Vec({0.5, 0.5, 0.5, 0.5})},
      {"extended_matching_pennies", Vec({1, 0, 0, 1, 0, 0})},
      {"extended_matching_pennies", Vec({0.5, 0.25, 0.25, 0.5, 0.25, 0.25})},
  };
  for (const auto& [name, x] : equilibria) {
    const Game game = LoadBuiltin(name);
    const Vector next = StepDiscrete(game, game.feasible_set(), x, 0.05);
    EXPECT_LE((next - x).norm(), 1e-12) << name;
  }
}

TEST(StepDiscrete, PrisonersDilemmaMovesTowardDefection) {
  const Game pd = LoadBuiltin("prisoners_dilemma");
  const Vector x = pd.feasible_set().Center();
  const Vector next = StepDiscrete(pd, pd.feasible_set(), x, 0.05);
  EXPECT_GT(next[1], x[1]);
  EXPECT_GT(next[3], x[3]);
  EXPECT_THROW(StepDiscrete(pd, pd.feasible_set(), Vec({0.5, 0.6, 0.5, 0.5}), 0.05), DomainError);
}

TEST(StepDiscrete, MatchingPenniesMovesAway) {
  const Game mp = LoadBuiltin("matching_pennies");
  const Vector star = mp.feasible_set().Center();
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    Vector x = star;
    const double a = rng.Uniform(-0.05, 0.05), b = rng.Uniform(-0.05, 0.05);
    x[0] += a;
    x[1] -= a;
    x[2] += b;
    x[3] -= b;
    if ((x - star).norm() < 1e-6) continue;
    const Vector next = StepDiscrete(mp, mp.feasible_set(), x, 0.05);
    EXPECT_GT((next - star).norm(), (x - star).norm());
  }
}

TEST(SimulateDiscrete, PrisonersDilemmaConverges) {
  const Game pd = LoadBuiltin("prisoners_dilemma");
  const Vector target = Vec({0, 1, 0, 1});
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Vector x0 = pd.feasible_set().Sample(rng);
    const TrajectoryRecord r = SimulateDiscrete(pd, pd.feasible_set(), x0, Discrete(0.05, 100000));
    EXPECT_EQ(r.classification, LimitClass::kConvergedPoint);
    ASSERT_TRUE(r.limit_point.has_value());
    EXPECT_LT((*r.limit_point - target).norm(), 1e-6);
  }
}

TEST(SimulateDiscrete, BattleOfSexesFromTheBlueBasin) {
  const Game bos = LoadBuiltin("battle_of_sexes");
  const TrajectoryRecord r = SimulateDiscrete(bos, bos.feasible_set(), Vec({0.9, 0.1, 0.9, 0.1}),
                                              Discrete(0.05, 10000));
  EXPECT_EQ(r.classification, LimitClass::kConvergedPoint);
  EXPECT_LT((*r.limit_point - Vec({1, 0, 1, 0})).norm(), 1e-9);
}

TEST(SimulateDiscrete, MatchingPenniesDoesNotConverge) {
  const Game mp = LoadBuiltin("matching_pennies");
  const TrajectoryRecord r = SimulateDiscrete(mp, mp.feasible_set(), Vec({0.6, 0.4, 0.5, 0.5}),
                                              Discrete(0.05, 100000));
  EXPECT_TRUE(r.classification == LimitClass::kNonConvergent ||
              r.classification == LimitClass::kSuspectedCycle)
      << ToString(r.classification);
}

TEST(SimulateDiscrete, RecordInvariants) {
  const Game bos = LoadBuiltin("battle_of_sexes");
  const TrajectoryRecord r = SimulateDiscrete(bos, bos.feasible_set(), Vec({0.3, 0.7, 0.8, 0.2}),
                                              Discrete(0.05, 500));
  ASSERT_EQ(r.states.size(), r.times.size());
  ASSERT_EQ(r.states.size(), r.gradient_norms.size());
  ASSERT_EQ(r.states.size(), r.step_displacements.size());
  EXPECT_EQ(r.step_displacements[0], 0.0);
  for (std::size_t t = 0; t < r.states.size(); ++t) {
    EXPECT_TRUE(bos.feasible_set().Contains(r.states[t], 1e-9));
    if (t > 0) {
      EXPECT_DOUBLE_EQ(r.step_displacements[t], (r.states[t] - r.states[t - 1]).norm());
    }
  }
  if (r.classification == LimitClass::kConvergedPoint) {
    EXPECT_LT(r.step_displacements.back(), 1e-8);
  }
}

TEST(SimulateDiscrete, Deterministic) {
  const Game emp = LoadBuiltin("extended_matching_pennies");
  const Vector x0 = Vec({0.2, 0.5, 0.3, 0.1, 0.6, 0.3});
  const TrajectoryRecord a = SimulateDiscrete(emp, emp.feasible_set(), x0, Discrete(0.05, 3000));
  const TrajectoryRecord b = SimulateDiscrete(emp, emp.feasible_set(), x0, Discrete(0.05, 3000));
  ASSERT_EQ(a.states.size(), b.states.size());
  for (std::size_t t = 0; t < a.states.size(); ++t) ASSERT_EQ(a.states[t], b.states[t]);
  EXPECT_EQ(a.classification, b.classification);
}

TEST(IntegrateGpds, EquilibriumIsStationary) {
  const Game bos = LoadBuiltin("battle_of_sexes");
  const Vector x = Vec({1, 0, 1, 0});
  EXPECT_EQ(GpdsField(bos, bos.feasible_set(), x, 0.05).norm(), 0.0);
  const TrajectoryRecord r = IntegrateGpds(bos, bos.feasible_set(), x, Continuous(1.0));
  EXPECT_EQ(r.classification, LimitClass::kConvergedPoint);
  EXPECT_EQ(r.states.back(), x);
}

TEST(IntegrateGpds, TullockConverges) {
  const Game tullock = LoadBuiltin("tullock");
  const TrajectoryRecord r =
      IntegrateGpds(tullock, tullock.feasible_set(), Vec({0.6, 0.6}), Continuous(50.0, 1e-3, 1.0));
  EXPECT_LT((r.states.back() - Vec({0.5, 0.5})).norm(), 1e-4);
}

TEST(IntegrateGpds, SpiralDecreasesWeightedNorm) {
  const Game spiral = LoadBuiltin("spiral");
  const TrajectoryRecord r =
      IntegrateGpds(spiral, spiral.feasible_set(), Vec({0.5, 0.5}), Continuous(20.0, 1e-3, 1.0));
  auto v = [](const Vector& x) { return x[0] * x[0] + 2 * x[1] * x[1]; };
  // Euler adds h^2 F'QF per step on top of h dV/dt <= 0.
  const double h = 1e-3;
  for (std::size_t t = 1; t < r.states.size(); ++t) {
    const Vector f = spiral.Gradient(r.states[t - 1]);
    const double second_order = h * h * (f[0] * f[0] + 2 * f[1] * f[1]);
    ASSERT_LE(v(r.states[t]), v(r.states[t - 1]) + second_order + 1e-16);
  }
  for (std::size_t t = 100; t < r.states.size(); t += 100) {
    if (v(r.states[t - 100]) > 1e-12) ASSERT_LT(v(r.states[t]), v(r.states[t - 100]));
  }
  EXPECT_LT(r.states.back().norm(), 1e-4);
  // The approach is a spiral: the first coordinate changes sign.
  bool negative = false;
  for (const Vector& x : r.states) negative = negative || x[0] < -1e-3;
  EXPECT_TRUE(negative);
}

TEST(IntegrateLpds, InteriorMatchesUnconstrainedEuler) {
  const Game spiral = LoadBuiltin("spiral");
  const double h = 1e-3;
  const TrajectoryRecord r =
      IntegrateLpds(spiral, spiral.feasible_set(), Vec({0.2, 0.1}), Continuous(0.5, h));
  Vector x = Vec({0.2, 0.1});
  for (std::size_t t = 1; t < r.states.size(); ++t) {
    x = x + h * spiral.Gradient(x);
    ASSERT_LE((r.states[t] - x).norm(), 1e-14);
  }
}

TEST(IntegrateLpds, CournotConverges) {
  const Game cournot = LoadBuiltin("cournot");
  const TrajectoryRecord r =
      IntegrateLpds(cournot, cournot.feasible_set(), Vec({0.1, 0.9}), Continuous(50.0));
  EXPECT_LT((r.states.back() - Vec({2.0 / 3.0, 2.0 / 3.0})).norm(), 1e-4);
}

TEST(IntegrateLpds, VertexVelocityStaysOnTheFace) {
  // At the vertex (1,0),(1,0) of Matching Pennies the row player gains by
  // staying and the column player wants to leave; the cone keeps each block
  // summing to one and nonnegative.
  const Game mp = LoadBuiltin("matching_pennies");
  const Vector x = Vec({1, 0, 1, 0});
  const Vector v = LpdsField(mp, mp.feasible_set(), x);
  EXPECT_NEAR(v.head(2).sum(), 0.0, 1e-15);
  EXPECT_NEAR(v.tail(2).sum(), 0.0, 1e-15);
  EXPECT_GE(v[1], 0.0);
  EXPECT_GE(v[3], 0.0);
  EXPECT_EQ(v.head(2).norm(), 0.0);
  EXPECT_GT(v[3], 0.0);
}

TEST(IntegrateLpds, ExtendedMatchingPenniesTrap) {
  const Game emp = LoadBuiltin("extended_matching_pennies");
  const Vector x0 = Vec({0.4, 0.3, 0.3, 0.45, 0.25, 0.3});
  const Vector strict = Vec({1, 0, 0, 1, 0, 0});
  const TrajectoryRecord r = IntegrateLpds(emp, emp.feasible_set(), x0, Continuous(20.0));
  for (std::size_t t = 1; t < r.states.size(); ++t) {
    ASSERT_LE(r.states[t][0], r.states[t - 1][0] + 1e-15);
    ASSERT_LE(r.states[t][3], r.states[t - 1][3] + 1e-15);
  }
  EXPECT_GE((r.states.back() - strict).norm(), (x0 - strict).norm());
}

TEST(Dynamics, SmallerStepsTrackTheFlow) {
  const Game pd = LoadBuiltin("prisoners_dilemma");
  const Vector x0 = Vec({0.7, 0.3, 0.6, 0.4});
  const double horizon = 0.5;
  SimulationConfig fine = Continuous(horizon, 1e-5);
  fine.stop_tolerance = 1e-300;
  const Vector flow = IntegrateLpds(pd, pd.feasible_set(), x0, fine).states.back();
  double previous = std::numeric_limits<double>::infinity();
  for (double eta : {0.05, 0.005}) {
    SimulationConfig config = Discrete(eta, static_cast<int>(std::lround(horizon / eta)));
    config.stop_tolerance = 1e-300;
    const Vector end = SimulateDiscrete(pd, pd.feasible_set(), x0, config).states.back();
    const double error = (end - flow).norm();
    EXPECT_LT(error, previous);
    previous = error;
  }
}

TrajectoryRecord FromStates(const std::vector<Vector>& states) {
  TrajectoryRecord r;
  r.states = states;
  r.step_displacements.push_back(0.0);
  for (std::size_t t = 1; t < states.size(); ++t) {
    r.step_displacements.push_back((states[t] - states[t - 1]).norm());
  }
  return r;
}

TEST(ClassifyLimit, ConstantTrajectory) {
  std::vector<Vector> states(50, Vec({0.25, 0.75}));
  EXPECT_EQ(ClassifyLimit(FromStates(states)), LimitClass::kConvergedPoint);
}

TEST(ClassifyLimit, PeriodFour) {
  const std::vector<Vector> corners = {Vec({0, 0}), Vec({1, 0}), Vec({1, 1}), Vec({0, 1})};
  std::vector<Vector> states;
  for (int t = 0; t < 40; ++t) states.push_back(corners[t % 4]);
  EXPECT_EQ(ClassifyLimit(FromStates(states)), LimitClass::kSuspectedCycle);
}

TEST(ClassifyLimit, ShortMatchingPenniesRunIsExhausted) {
  // Twenty steps outward from near the equilibrium: every state is farther
  // from all earlier ones and nothing has closed up yet.
  const Game mp = LoadBuiltin("matching_pennies");
  const TrajectoryRecord r = SimulateDiscrete(mp, mp.feasible_set(), Vec({0.51, 0.49, 0.5, 0.5}),
                                              Discrete(0.05, 20));
  EXPECT_EQ(ClassifyLimit(r), LimitClass::kHorizonExhausted);
  EXPECT_EQ(r.classification, LimitClass::kHorizonExhausted);
}

TEST(ClassifyLimit, EmptyRecordThrows) {
  EXPECT_THROW(ClassifyLimit(TrajectoryRecord()), ParameterError);
}

}  // namespace
}  // namespace gdl
