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

#ifndef GDL_EQUILIBRIUM_H_
#define GDL_EQUILIBRIUM_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdl/common.h"
#include "gdl/game_models.h"
#include "gdl/projection.h"

namespace gdl {

enum class EquilibriumKind { kPure, kMixed, kInteriorContinuous };
std::string ToString(EquilibriumKind kind);

struct EquilibriumCandidate {
  Vector point;
  EquilibriumKind kind = EquilibriumKind::kPure;
  std::optional<bool> strict;
  double vi_gap = 0.0;
  // Pure profile for kPure candidates.
  std::vector<int> profile;
  // Iterative solvers: whether the stopping rule was met, and the final
  // displacement or residual norm.
  bool converged = true;
  int iterations = 0;
  double residual = 0.0;
};

// Payoff tolerance used for deviation comparisons: 1e-12 (1 + max |u|).
double PayoffTolerance(const FiniteGame& game);

// All pure Nash equilibria in lexicographic profile order. Throws
// DimensionError when the game has more than 1e7 profiles.
std::vector<EquilibriumCandidate> EnumeratePureNash(const FiniteGame& game);

// max over z in the set of <F(x), z - x>; zero or below iff x solves the VI.
double ViGap(const Game& game, const FeasibleSet& set, const Vector& x);

// ||proj(x + gamma F(x)) - x||.
double FixedPointResidual(const Game& game, const FeasibleSet& set,
                          const Vector& x, double gamma);

// Iterates x <- proj(x + gamma F(x)) until the displacement drops below tol.
// Non-convergence is reported through `converged`, not thrown.
EquilibriumCandidate FixedPointSolve(const Game& game, const FeasibleSet& set,
                                     double gamma, const Vector& x0,
                                     double tol = 1e-12, int max_iter = 100000);

struct NewtonOptions {
  double tol = 1e-12;
  int max_iter = 100;
  int max_halvings = 30;
};

// Damped Newton on the tangential part of F. For boxes this is F(x) = 0; on
// simplex products it solves F_ik = F_il within every block, which
// characterizes fully mixed equilibria. Throws NumericalError on a singular
// Jacobian, a failed line search, or when max_iter is exhausted. Feasibility
// of the result is not checked.
Vector InteriorRootSolve(const Game& game, const Vector& x0,
                         const NewtonOptions& options = {});

// Fully mixed equilibria found by Newton from the uniform profile and
// `n_random_starts` random interior starts. Only interior points with
// vi_gap <= 1e-10 are kept, deduplicated at distance 1e-8.
std::vector<EquilibriumCandidate> FindMixedEquilibria(const FiniteGame& game,
                                                      int n_random_starts,
                                                      std::uint64_t seed);

enum class MonotonicityClass {
  kStronglyMonotone,
  kStrictlyMonotone,
  kMonotone,
  kPseudomonotoneOnly,
  kNoneDetected,
};
std::string ToString(MonotonicityClass c);

// Sampling evidence for the classes of monotone maps, using the convention
// <F(x) - F(y), x - y> <= 0 for monotone payoff gradients.
struct MonotonicityReport {
  MonotonicityClass classification = MonotonicityClass::kNoneDetected;
  // Sample infimum of -<F(x)-F(y), x-y> / ||x-y||^2 when positive.
  std::optional<double> strong_modulus;
  int pairs = 0;
  int monotone_violations = 0;
  int strict_violations = 0;
  int strong_violations = 0;
  int pseudomonotone_violations = 0;
  double alpha_infimum = 0.0;
  double max_abs_inner_product = 0.0;
  // Largest eigenvalue of (J + J')/2 on the tangent space over sampled points.
  double max_symmetrized_eigenvalue = 0.0;
  int jacobian_samples = 0;
  // Constant-Jacobian games: the eigenvalue bound holds on the whole region.
  bool exact_jacobian_test = false;
};

// Samples n_samples points of `region` (a subset of the game's set) and
// tests all consecutive pairs (x_k, x_{k+1}) plus the Jacobian at each point.
MonotonicityReport ComputeMonotonicityReport(const Game& game,
                                             const FeasibleSet& region,
                                             int n_samples, std::uint64_t seed);

// Largest eigenvalue of (J + J')/2 restricted to the tangent space of `set`.
double MaxSymmetrizedEigenvalue(const Matrix& jacobian, const FeasibleSet& set);

// max over sampled points of the spectral norm of J.
double EstimateLipschitz(const Game& game, const FeasibleSet& region,
                         int n_samples, std::uint64_t seed);

}  // namespace gdl

#endif  // GDL_EQUILIBRIUM_H_
