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

#include "gdl/equilibrium.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gdl/rng.h"

namespace gdl {

namespace {

constexpr std::int64_t kMaxProfiles = 10000000;

// Rows e_k - e_last for each simplex block, or the identity for boxes.
Matrix ReductionRows(const FeasibleSet& set) {
  const int dim = set.dimension();
  if (set.is_box()) return Matrix::Identity(dim, dim);
  Matrix rows = Matrix::Zero(dim - set.num_blocks(), dim);
  int r = 0;
  for (int b = 0; b < set.num_blocks(); ++b) {
    const int offset = set.block_offsets()[b];
    const int d = set.block_sizes()[b];
    for (int k = 0; k < d - 1; ++k, ++r) {
      rows(r, offset + k) = 1.0;
      rows(r, offset + d - 1) = -1.0;
    }
  }
  return rows;
}

bool IsVertex(const Vector& x) {
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    if (x[k] > 1e-12 && x[k] < 1.0 - 1e-12) return false;
  }
  return true;
}

}  // namespace

std::string ToString(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::kPure:
      return "pure";
    case EquilibriumKind::kMixed:
      return "mixed";
    case EquilibriumKind::kInteriorContinuous:
      return "interior_continuous";
  }
  return "unknown";
}

std::string ToString(MonotonicityClass c) {
  switch (c) {
    case MonotonicityClass::kStronglyMonotone:
      return "strongly_monotone";
    case MonotonicityClass::kStrictlyMonotone:
      return "strictly_monotone";
    case MonotonicityClass::kMonotone:
      return "monotone";
    case MonotonicityClass::kPseudomonotoneOnly:
      return "pseudomonotone_only";
    case MonotonicityClass::kNoneDetected:
      return "none_detected";
  }
  return "unknown";
}

double PayoffTolerance(const FiniteGame& game) {
  return 1e-12 * (1.0 + std::max(std::abs(game.MinPayoff()), std::abs(game.MaxPayoff())));
}

std::vector<EquilibriumCandidate> EnumeratePureNash(const FiniteGame& game) {
  if (game.num_profiles() > kMaxProfiles) {
    throw DimensionError("game has " + std::to_string(game.num_profiles()) +
                         " profiles; enumeration is limited to 1e7");
  }
  const double tol = PayoffTolerance(game);
  const Game wrapped(game);
  std::vector<EquilibriumCandidate> out;
  for (std::int64_t idx = 0; idx < game.num_profiles(); ++idx) {
    std::vector<int> profile = game.ProfileFromIndex(idx);
    bool equilibrium = true;
    bool strict = true;
    for (int i = 0; i < game.num_players() && equilibrium; ++i) {
      const double current = game.Payoff(i, idx);
      std::vector<int> deviation = profile;
      for (int k = 0; k < game.action_counts()[i]; ++k) {
        if (k == profile[i]) continue;
        deviation[i] = k;
        const double gain = game.Payoff(i, deviation) - current;
        if (gain > tol) {
          equilibrium = false;
          break;
        }
        if (gain >= -tol) strict = false;
      }
    }
    if (!equilibrium) continue;
    EquilibriumCandidate c;
    c.point = game.PureProfilePoint(profile);
    c.kind = EquilibriumKind::kPure;
    c.strict = strict;
    c.profile = std::move(profile);
    c.vi_gap = ViGap(wrapped, game.feasible_set(), c.point);
    out.push_back(std::move(c));
  }
  return out;
}

double ViGap(const Game& game, const FeasibleSet& set, const Vector& x) {
  set.CheckContains(x, "VI gap argument");
  const Vector f = game.Gradient(x);
  double gap = 0.0;
  if (set.is_box()) {
    for (int k = 0; k < set.dimension(); ++k) {
      const Interval b = set.bounds()[k];
      gap += f[k] > 0.0 ? f[k] * (b.hi - x[k]) : f[k] * (b.lo - x[k]);
    }
    return gap;
  }
  for (int b = 0; b < set.num_blocks(); ++b) {
    const auto fb = f.segment(set.block_offsets()[b], set.block_sizes()[b]);
    const auto xb = x.segment(set.block_offsets()[b], set.block_sizes()[b]);
    gap += fb.maxCoeff() - fb.dot(xb);
  }
  return gap;
}

double FixedPointResidual(const Game& game, const FeasibleSet& set, const Vector& x,
                          double gamma) {
  return (set.Project(x + gamma * game.Gradient(x)) - x).norm();
}

EquilibriumCandidate FixedPointSolve(const Game& game, const FeasibleSet& set,
                                     double gamma, const Vector& x0, double tol,
                                     int max_iter) {
  if (!(gamma > 0.0)) throw ParameterError("fixed-point step gamma must be positive");
  if (!(tol > 0.0)) throw ParameterError("fixed-point tolerance must be positive");
  set.CheckContains(x0, "fixed-point start");
  EquilibriumCandidate c;
  Vector x = set.Clean(x0);
  c.converged = false;
  double displacement = std::numeric_limits<double>::infinity();
  int iter = 0;
  while (iter < max_iter) {
    Vector next = set.Project(x + gamma * game.Gradient(x));
    displacement = (next - x).norm();
    x = std::move(next);
    ++iter;
    if (displacement < tol) {
      c.converged = true;
      break;
    }
  }
  c.point = x;
  c.iterations = iter;
  c.residual = displacement;
  c.vi_gap = ViGap(game, set, x);
  if (game.is_finite()) {
    c.kind = IsVertex(x) ? EquilibriumKind::kPure : EquilibriumKind::kMixed;
    if (c.kind == EquilibriumKind::kPure) {
      for (int b = 0; b < set.num_blocks(); ++b) {
        Eigen::Index arg;
        x.segment(set.block_offsets()[b], set.block_sizes()[b]).maxCoeff(&arg);
        c.profile.push_back(static_cast<int>(arg));
      }
    }
  } else {
    c.kind = EquilibriumKind::kInteriorContinuous;
  }
  return c;
}

Vector InteriorRootSolve(const Game& game, const Vector& x0, const NewtonOptions& options) {
  const FeasibleSet& set = game.feasible_set();
  if (x0.size() != set.dimension()) {
    throw DimensionError("Newton start has the wrong dimension");
  }
  const Matrix rows = ReductionRows(set);
  const Matrix columns = rows.transpose();
  auto residual = [&](const Vector& x) -> Vector { return rows * game.Gradient(x); };
  Vector x = x0;
  Vector r = residual(x);
  double norm = r.norm();
  if (!std::isfinite(norm)) throw NumericalError("Newton start has a non-finite residual");
  for (int iter = 0; iter < options.max_iter; ++iter) {
    if (norm < options.tol) return x;
    const Matrix jac = rows * game.Jacobian(x) * columns;
    Eigen::FullPivLU<Matrix> lu(jac);
    if (!lu.isInvertible()) {
      throw NumericalError("singular Jacobian at Newton iterate " + FormatVector(x));
    }
    const Vector step = columns * lu.solve(-r);
    double lambda = 1.0;
    bool accepted = false;
    for (int h = 0; h <= options.max_halvings; ++h, lambda *= 0.5) {
      const Vector trial = x + lambda * step;
      const Vector trial_r = residual(trial);
      const double trial_norm = trial_r.norm();
      if (std::isfinite(trial_norm) && trial_norm < norm) {
        x = trial;
        r = trial_r;
        norm = trial_norm;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      if (norm < std::sqrt(options.tol)) {
        // Rounding floor reached; no step reduces the residual further.
        return x;
      }
      throw NumericalError("Newton line search failed at " + FormatVector(x));
    }
  }
  if (norm < options.tol) return x;
  throw NumericalError("Newton did not converge in " + std::to_string(options.max_iter) +
                       " iterations (residual " + FormatDouble(norm) + ")");
}

std::vector<EquilibriumCandidate> FindMixedEquilibria(const FiniteGame& game,
                                                      int n_random_starts,
                                                      std::uint64_t seed) {
  const Game wrapped(game);
  const FeasibleSet& set = game.feasible_set();
  std::vector<Vector> starts = {set.Center()};
  Rng rng(seed);
  for (int s = 0; s < n_random_starts; ++s) starts.push_back(set.Sample(rng));
  std::vector<EquilibriumCandidate> out;
  for (const Vector& start : starts) {
    Vector x;
    try {
      x = InteriorRootSolve(wrapped, start);
    } catch (const NumericalError&) {
      continue;
    }
    if (!set.Contains(x, 0.0) || !set.IsInterior(x, 1e-9)) continue;
    const double gap = ViGap(wrapped, set, x);
    if (gap > 1e-10) continue;
    bool duplicate = false;
    for (const auto& c : out) duplicate = duplicate || (c.point - x).norm() < 1e-8;
    if (duplicate) continue;
    EquilibriumCandidate c;
    c.point = x;
    c.kind = EquilibriumKind::kMixed;
    c.strict = false;
    c.vi_gap = gap;
    c.residual = (ReductionRows(set) * wrapped.Gradient(x)).norm();
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.point.data(), a.point.data() + a.point.size(),
                                        b.point.data(), b.point.data() + b.point.size());
  });
  return out;
}

double MaxSymmetrizedEigenvalue(const Matrix& jacobian, const FeasibleSet& set) {
  const Matrix basis = TangentBasis(set);
  if (basis.cols() == 0) return 0.0;
  const Matrix sym = basis.transpose() * (0.5 * (jacobian + jacobian.transpose())) * basis;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

MonotonicityReport ComputeMonotonicityReport(const Game& game, const FeasibleSet& region,
                                             int n_samples, std::uint64_t seed) {
  if (n_samples < 2) throw ParameterError("monotonicity report needs at least 2 samples");
  if (region.dimension() != game.dimension()) {
    throw DimensionError("monotonicity region has the wrong dimension");
  }
  Rng rng(seed);
  std::vector<Vector> points;
  std::vector<Vector> grads;
  points.reserve(n_samples);
  for (int s = 0; s < n_samples; ++s) {
    points.push_back(region.Sample(rng));
    grads.push_back(game.Gradient(points.back()));
  }
  MonotonicityReport report;
  report.alpha_infimum = std::numeric_limits<double>::infinity();
  for (int s = 0; s + 1 < n_samples; ++s) {
    const Vector& x = points[s + 1];
    const Vector& y = points[s];
    const Vector dx = x - y;
    const double dist2 = dx.squaredNorm();
    if (dist2 == 0.0) continue;
    const Vector df = grads[s + 1] - grads[s];
    const double inner = df.dot(dx);
    const double tol = 1e-12 * (1.0 + df.norm() * std::sqrt(dist2));
    ++report.pairs;
    report.max_abs_inner_product = std::max(report.max_abs_inner_product, std::abs(inner));
    report.alpha_infimum = std::min(report.alpha_infimum, -inner / dist2);
    if (inner > tol) ++report.monotone_violations;
    if (inner >= -tol) ++report.strict_violations;
    if (-inner / dist2 <= 1e-10) ++report.strong_violations;
    // <F(y), x - y> <= 0 must imply <F(x), x - y> <= 0, and symmetrically.
    const double fy = grads[s].dot(dx);
    const double fx = grads[s + 1].dot(dx);
    const bool forward = fy <= 0.0 && fx > tol;
    const bool backward = -fx <= 0.0 && -fy > tol;
    if (forward || backward) ++report.pseudomonotone_violations;
  }
  const bool constant = game.constant_jacobian();
  const int jac_samples = constant ? 1 : n_samples;
  report.max_symmetrized_eigenvalue = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < jac_samples; ++s) {
    report.max_symmetrized_eigenvalue =
        std::max(report.max_symmetrized_eigenvalue,
                 MaxSymmetrizedEigenvalue(game.Jacobian(points[s]), region));
  }
  report.jacobian_samples = jac_samples;
  report.exact_jacobian_test = constant;

  if (report.pairs > 0 && report.strong_violations == 0 && report.alpha_infimum > 0.0) {
    report.classification = MonotonicityClass::kStronglyMonotone;
    report.strong_modulus = report.alpha_infimum;
  } else if (report.pairs > 0 && report.strict_violations == 0) {
    report.classification = MonotonicityClass::kStrictlyMonotone;
  } else if (report.monotone_violations == 0) {
    report.classification = MonotonicityClass::kMonotone;
  } else if (report.pseudomonotone_violations == 0) {
    report.classification = MonotonicityClass::kPseudomonotoneOnly;
  } else {
    report.classification = MonotonicityClass::kNoneDetected;
  }
  if (report.pairs == 0) report.alpha_infimum = 0.0;
  return report;
}

double EstimateLipschitz(const Game& game, const FeasibleSet& region, int n_samples,
                         std::uint64_t seed) {
  Rng rng(seed);
  double best = 0.0;
  const int samples = game.constant_jacobian() ? 1 : n_samples;
  for (int s = 0; s < samples; ++s) {
    const Matrix jac = game.Jacobian(region.Sample(rng));
    Eigen::JacobiSVD<Matrix> svd(jac);
    best = std::max(best, svd.singularValues()(0));
  }
  return best;
}

}  // namespace gdl
