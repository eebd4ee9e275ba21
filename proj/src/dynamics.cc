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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace gdl {

namespace {

constexpr double kRevisitTolerance = 1e-6;
constexpr int kMinCycleGap = 10;
constexpr double kMinCycleArcLength = 1e-4;

// Online revisit detector over snapshots taken every `stride` steps.
class CycleDetector {
 public:
  explicit CycleDetector(int expected_steps)
      : stride_(std::max(1, expected_steps / 1000)) {}

  // Returns the step of a matching snapshot, if any, then records the state
  // when it falls on the stride.
  std::optional<int> Observe(int step, const Vector& x, double arc_length) {
    std::optional<int> match;
    const double tol2 = kRevisitTolerance * kRevisitTolerance;
    for (const Snapshot& s : snapshots_) {
      if (step - s.step < kMinCycleGap) break;
      if (arc_length - s.arc_length <= kMinCycleArcLength) continue;
      double d2 = 0.0;
      for (Eigen::Index k = 0; k < x.size() && d2 <= tol2; ++k) {
        const double diff = x[k] - s.state[k];
        d2 += diff * diff;
      }
      if (d2 <= tol2) {
        match = s.step;
        break;
      }
    }
    if (step % stride_ == 0) snapshots_.push_back({step, x, arc_length});
    return match;
  }

 private:
  struct Snapshot {
    int step;
    Vector state;
    double arc_length;
  };
  int stride_;
  std::vector<Snapshot> snapshots_;
};

// Decides between a recurrent tail and one still settling or drifting.
LimitClass ClassifyTail(const TrajectoryRecord& record) {
  const int n = static_cast<int>(record.states.size());
  if (n < 4) return LimitClass::kHorizonExhausted;
  const int tail = std::min(n, std::max(20, n / 10));
  const int start = n - tail;
  const int mid = start + tail / 2;
  double early = 0.0, late = 0.0;
  for (int k = start + 1; k <= mid; ++k) early += record.step_displacements[k];
  for (int k = mid + 1; k < n; ++k) late += record.step_displacements[k];
  early /= std::max(1, mid - start);
  late /= std::max(1, n - 1 - mid);
  if (late < 0.5 * early) return LimitClass::kHorizonExhausted;

  const Vector& last = record.states.back();
  Vector lo = last, hi = last;
  for (int k = start; k < n; ++k) {
    lo = lo.cwiseMin(record.states[k]);
    hi = hi.cwiseMax(record.states[k]);
  }
  const double diameter = (hi - lo).norm();
  double nearest = std::numeric_limits<double>::infinity();
  for (int k = start; k <= mid; ++k) {
    nearest = std::min(nearest, (record.states[k] - last).norm());
  }
  if (nearest <= 0.25 * diameter) return LimitClass::kNonConvergent;
  return LimitClass::kHorizonExhausted;
}

using StepFunction = std::function<Vector(const Vector&)>;

TrajectoryRecord Run(const Game& game, const FeasibleSet& set, const Vector& x0,
                     int steps, double time_step, double stop_threshold,
                     const StepFunction& step) {
  set.CheckContains(x0, "initial state");
  TrajectoryRecord record;
  Vector x = set.Clean(x0);
  record.states.push_back(x);
  record.times.push_back(0.0);
  record.gradient_norms.push_back(game.Gradient(x).norm());
  record.step_displacements.push_back(0.0);
  CycleDetector detector(steps);
  double arc_length = 0.0;
  detector.Observe(0, x, arc_length);
  for (int t = 1; t <= steps; ++t) {
    Vector next = step(x);
    const double displacement = (next - x).norm();
    arc_length += displacement;
    x = std::move(next);
    record.states.push_back(x);
    record.times.push_back(t * time_step);
    record.gradient_norms.push_back(game.Gradient(x).norm());
    record.step_displacements.push_back(displacement);
    if (displacement < stop_threshold) {
      record.classification = LimitClass::kConvergedPoint;
      record.limit_point = x;
      return record;
    }
    if (auto match = detector.Observe(t, x, arc_length)) {
      record.classification = LimitClass::kSuspectedCycle;
      record.cycle_start = *match;
      return record;
    }
  }
  record.classification = ClassifyTail(record);
  return record;
}

int ContinuousSteps(const SimulationConfig& config) {
  const double steps = std::ceil(config.final_time / config.integrator_step - 1e-9);
  if (steps > 1e8) throw ParameterError("final_time / integrator_step exceeds 1e8 steps");
  return std::max(1, static_cast<int>(steps));
}

}  // namespace

void SimulationConfig::Validate() const {
  if (!(step_size > 0.0) || !std::isfinite(step_size)) {
    throw ParameterError("step size eta must be positive");
  }
  if (horizon < 1) throw ParameterError("horizon T must be at least 1");
  if (!(final_time > 0.0) || !std::isfinite(final_time)) {
    throw ParameterError("final time must be positive");
  }
  if (!(integrator_step > 0.0) || !std::isfinite(integrator_step)) {
    throw ParameterError("integrator step h must be positive");
  }
  if (!(stop_tolerance > 0.0)) throw ParameterError("stop tolerance must be positive");
}

std::string ToString(LimitClass c) {
  switch (c) {
    case LimitClass::kConvergedPoint:
      return "converged_point";
    case LimitClass::kSuspectedCycle:
      return "suspected_cycle";
    case LimitClass::kNonConvergent:
      return "non_convergent";
    case LimitClass::kHorizonExhausted:
      return "horizon_exhausted";
  }
  return "unknown";
}

Vector StepDiscrete(const Game& game, const FeasibleSet& set, const Vector& x,
                    double eta) {
  set.CheckContains(x, "state");
  return set.Project(x + eta * game.Gradient(x));
}

Vector GpdsField(const Game& game, const FeasibleSet& set, const Vector& x,
                 double eta) {
  return set.Project(x + eta * game.Gradient(x)) - x;
}

Vector LpdsField(const Game& game, const FeasibleSet& set, const Vector& x) {
  return TangentCone(set, x).Project(game.Gradient(x));
}

TrajectoryRecord SimulateDiscrete(const Game& game, const FeasibleSet& set,
                                  const Vector& x0, const SimulationConfig& config) {
  config.Validate();
  const double eta = config.step_size;
  return Run(game, set, x0, config.horizon, 1.0, config.stop_tolerance,
             [&](const Vector& x) { return set.Project(x + eta * game.Gradient(x)); });
}

TrajectoryRecord IntegrateGpds(const Game& game, const FeasibleSet& set,
                               const Vector& x0, const SimulationConfig& config) {
  config.Validate();
  const double eta = config.step_size;
  const double h = config.integrator_step;
  return Run(game, set, x0, ContinuousSteps(config), h, config.stop_tolerance * h,
             [&](const Vector& x) {
               return set.Clean(x + h * GpdsField(game, set, x, eta));
             });
}

TrajectoryRecord IntegrateLpds(const Game& game, const FeasibleSet& set,
                               const Vector& x0, const SimulationConfig& config) {
  config.Validate();
  const double h = config.integrator_step;
  return Run(game, set, x0, ContinuousSteps(config), h, config.stop_tolerance * h,
             [&](const Vector& x) {
               return set.Project(x + h * LpdsField(game, set, set.Clean(x)));
             });
}

LimitClass ClassifyLimit(const TrajectoryRecord& record, double stop_tolerance) {
  const int n = static_cast<int>(record.states.size());
  if (n == 0) throw ParameterError("cannot classify an empty trajectory");
  if (n == 1) return LimitClass::kConvergedPoint;
  auto displacement = [&record](int k) {
    return k < static_cast<int>(record.step_displacements.size())
               ? record.step_displacements[k]
               : (record.states[k] - record.states[k - 1]).norm();
  };
  if (displacement(n - 1) < stop_tolerance) return LimitClass::kConvergedPoint;
  CycleDetector detector(n - 1);
  double arc_length = 0.0;
  for (int k = 0; k < n; ++k) {
    if (k > 0) arc_length += displacement(k);
    if (detector.Observe(k, record.states[k], arc_length)) {
      return LimitClass::kSuspectedCycle;
    }
  }
  TrajectoryRecord copy;
  copy.states = record.states;
  copy.step_displacements.resize(n);
  for (int k = 0; k < n; ++k) copy.step_displacements[k] = k == 0 ? 0.0 : displacement(k);
  return ClassifyTail(copy);
}

}  // namespace gdl
