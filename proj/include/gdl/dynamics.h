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

#ifndef GDL_DYNAMICS_H_
#define GDL_DYNAMICS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdl/common.h"
#include "gdl/game_models.h"
#include "gdl/projection.h"

namespace gdl {

struct SimulationConfig {
  // Step size of the discrete map and the projection parameter of GPDS.
  double step_size = 0.05;
  // Number of discrete steps.
  int horizon = 1000;
  // Final time of continuous integration.
  double final_time = 10.0;
  // Euler step of continuous integration.
  double integrator_step = 1e-3;
  // Displacement below which a trajectory counts as converged. For
  // continuous dynamics the per-step displacement is divided by h.
  double stop_tolerance = 1e-8;
  std::uint64_t seed = 0;

  // Throws ParameterError on invalid values.
  void Validate() const;
};

enum class LimitClass {
  kConvergedPoint,
  kSuspectedCycle,
  kNonConvergent,
  kHorizonExhausted,
};

std::string ToString(LimitClass c);

struct TrajectoryRecord {
  std::vector<Vector> states;
  // Time stamp of each state (step index for discrete dynamics).
  std::vector<double> times;
  // ||F(x_t)|| at every state.
  std::vector<double> gradient_norms;
  // ||x_t - x_{t-1}||; zero for the initial state.
  std::vector<double> step_displacements;
  LimitClass classification = LimitClass::kHorizonExhausted;
  std::optional<Vector> limit_point;
  // Step of the earlier state matched by cycle detection.
  std::optional<int> cycle_start;
};

// One step x + eta F(x) projected back onto the set.
Vector StepDiscrete(const Game& game, const FeasibleSet& set, const Vector& x,
                    double eta);

// Vector fields of the two continuous-time systems.
Vector GpdsField(const Game& game, const FeasibleSet& set, const Vector& x,
                 double eta);
Vector LpdsField(const Game& game, const FeasibleSet& set, const Vector& x);

TrajectoryRecord SimulateDiscrete(const Game& game, const FeasibleSet& set,
                                  const Vector& x0, const SimulationConfig& config);
TrajectoryRecord IntegrateGpds(const Game& game, const FeasibleSet& set,
                               const Vector& x0, const SimulationConfig& config);
TrajectoryRecord IntegrateLpds(const Game& game, const FeasibleSet& set,
                               const Vector& x0, const SimulationConfig& config);

// Classifies a finished record from its states alone.
//  converged_point    final displacement below `stop_tolerance`;
//  suspected_cycle    a snapshot state (stride max(1, n/1000)) at least 10
//                     steps back lies within 1e-6 of a later state, and the
//                     path between them has length above 1e-4;
//  horizon_exhausted  the path is still settling or drifting away from where
//                     it has been;
//  non_convergent     the tail keeps moving and returns near earlier states.
LimitClass ClassifyLimit(const TrajectoryRecord& record, double stop_tolerance = 1e-8);

}  // namespace gdl

#endif  // GDL_DYNAMICS_H_
