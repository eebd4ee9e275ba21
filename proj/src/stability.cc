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

#include "gdl/stability.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "gdl/equilibrium.h"

namespace gdl {

namespace {

constexpr double kCenterTolerance = 1e-9;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Runs fn(begin, end) over disjoint chunks of [0, n).
template <typename Fn>
void ParallelFor(std::size_t n, int threads, Fn fn) {
  if (threads <= 0) threads = DefaultThreadCount();
  const std::size_t max_useful = n / 4096 + 1;
  const std::size_t workers = std::min<std::size_t>(threads, max_useful);
  if (workers <= 1) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back([&, w, begin, end] {
      try {
        if (begin < end) fn(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void CheckRegion(const Game& game, const FeasibleSet& region, const Vector& x_star) {
  if (region.dimension() != game.dimension()) {
    throw DimensionError("scan region has dimension " + std::to_string(region.dimension()) +
                         ", game has " + std::to_string(game.dimension()));
  }
  game.feasible_set().CheckContains(x_star, "equilibrium");
}

RegionScan MakeScan(ScanKind kind, const FeasibleSet& region, int resolution,
                    const Vector& center, const Matrix& q) {
  RegionScan scan{Grid(region, resolution)};
  scan.kind = kind;
  scan.center = center;
  scan.q = q;
  const std::size_t n = scan.grid.size();
  scan.v.assign(n, kNaN);
  scan.s.assign(n, kNaN);
  scan.delta_v.assign(n, kNaN);
  scan.delta_v_bar.assign(n, kNaN);
  scan.in_v.assign(n, 0);
  scan.in_vbar.assign(n, 0);
  scan.in_uc.assign(n, 0);
  scan.certifiable.assign(n, 0);
  return scan;
}

void SummarizeViolations(RegionScan& scan) {
  double nearest = std::numeric_limits<double>::infinity();
  Vector x;
  for (std::size_t p = 0; p < scan.grid.size(); ++p) {
    if (scan.IsCenter(p) || !(scan.s[p] >= 0.0)) continue;
    ++scan.violation_count;
    scan.grid.PointInto(p, x);
    nearest = std::min(nearest, (x - scan.center).norm());
  }
  if (scan.violation_count > 0) scan.violation_free_radius = nearest;
}

// True when V strictly decreases along a short unconstrained flow from x
// that stays inside the region.
bool DecreasesAlongFlow(const Game& game, const QuadraticLyapunov& lyapunov,
                        const FeasibleSet& region, const Vector& x0) {
  constexpr int kSteps = 50;
  constexpr double kStep = 1e-3;
  const double v0 = lyapunov.Value(x0);
  if (v0 <= 0.0) return false;
  Vector x = x0;
  for (int k = 0; k < kSteps; ++k) {
    const Vector k1 = game.Gradient(x);
    const Vector k2 = game.Gradient(x + 0.5 * kStep * k1);
    const Vector k3 = game.Gradient(x + 0.5 * kStep * k2);
    const Vector k4 = game.Gradient(x + kStep * k3);
    x += kStep / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!region.Contains(x, 0.0)) return false;
  }
  return lyapunov.Value(x) < v0 * (1.0 - 1e-12);
}

}  // namespace

QuadraticLyapunov::QuadraticLyapunov(Vector center)
    : QuadraticLyapunov(center, Matrix::Identity(center.size(), center.size())) {}

QuadraticLyapunov::QuadraticLyapunov(Vector center, Matrix q)
    : center_(std::move(center)), q_(std::move(q)) {
  if (q_.rows() != center_.size() || q_.cols() != center_.size()) {
    throw DimensionError("Lyapunov matrix Q must be square with the center's dimension");
  }
  if (!q_.allFinite() || (q_ - q_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw ParameterError("Lyapunov matrix Q must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(q_, Eigen::EigenvaluesOnly);
  if (!(solver.eigenvalues().minCoeff() > 0.0)) {
    throw ParameterError("Lyapunov matrix Q must be positive definite");
  }
}

std::optional<double> QuadraticLyapunov::IsotropicScale() const {
  const double scale = q_(0, 0);
  const Matrix diff = q_ - scale * Matrix::Identity(q_.rows(), q_.cols());
  if (diff.cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, std::abs(scale))) {
    return std::nullopt;
  }
  return scale;
}

double QuadraticLyapunov::Value(const Vector& x) const {
  const Vector d = x - center_;
  return d.dot(q_ * d);
}

Vector QuadraticLyapunov::Gradient(const Vector& x) const {
  return 2.0 * (q_ * (x - center_));
}

std::string ToString(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::kAsymptoticallyStable:
      return "asymptotically_stable";
    case StabilityVerdict::kUnstable:
      return "unstable";
    case StabilityVerdict::kMarginal:
      return "marginal";
    case StabilityVerdict::kNotApplicable:
      return "not_applicable";
  }
  return "unknown";
}

std::string ToString(ScanKind kind) {
  switch (kind) {
    case ScanKind::kVariational:
      return "variational";
    case ScanKind::kDiscreteLyapunov:
      return "discrete_lyapunov";
    case ScanKind::kContinuousLyapunov:
      return "continuous_lyapunov";
  }
  return "unknown";
}

bool RegionScan::IsCenter(std::size_t index) const {
  return (grid.Point(index) - center).norm() <= kCenterTolerance;
}

LinearStabilityResult LinearStability(const Game& game, const Vector& x_star) {
  const FeasibleSet& set = game.feasible_set();
  set.CheckContains(x_star, "equilibrium");
  LinearStabilityResult result;
  const Matrix basis = TangentBasis(set);
  const Matrix reduced = basis.transpose() * game.Jacobian(x_star) * basis;
  if (reduced.size() > 0) {
    Eigen::EigenSolver<Matrix> solver(reduced, false);
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
      result.eigenvalues.push_back(solver.eigenvalues()[k]);
    }
  }
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end(),
            [](const auto& a, const auto& b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });
  result.interior = set.IsInterior(x_star);
  if (!result.interior) {
    result.verdict = StabilityVerdict::kNotApplicable;
    result.note =
        "point is on the boundary of the feasible set; linearization does not "
        "determine stability there, use a VS or Lyapunov scan";
    return result;
  }
  double max_real = -std::numeric_limits<double>::infinity();
  for (const auto& ev : result.eigenvalues) max_real = std::max(max_real, ev.real());
  if (result.eigenvalues.empty() || max_real > 1e-10) {
    result.verdict = result.eigenvalues.empty() ? StabilityVerdict::kMarginal
                                                : StabilityVerdict::kUnstable;
  } else if (max_real < -1e-10) {
    result.verdict = StabilityVerdict::kAsymptoticallyStable;
  } else {
    result.verdict = StabilityVerdict::kMarginal;
  }
  return result;
}

RegionScan VsScan(const Game& game, const Vector& x_star, const FeasibleSet& region,
                  int resolution, int threads) {
  CheckRegion(game, region, x_star);
  const int dim = game.dimension();
  RegionScan scan = MakeScan(ScanKind::kVariational, region, resolution, x_star,
                             Matrix::Identity(dim, dim));
  ParallelFor(scan.grid.size(), threads, [&](std::size_t begin, std::size_t end) {
    Vector x;
    for (std::size_t p = begin; p < end; ++p) {
      scan.grid.PointInto(p, x);
      const Vector d = x - x_star;
      scan.v[p] = d.squaredNorm();
      scan.s[p] = game.Gradient(x).dot(d);
      const bool center = d.norm() <= kCenterTolerance;
      scan.in_v[p] = center || scan.s[p] < 0.0;
      scan.in_vbar[p] = scan.in_v[p];
      scan.certifiable[p] = scan.in_v[p];
    }
  });
  SummarizeViolations(scan);
  return scan;
}

std::optional<double> StrongVsAlpha(const Game& game, const Vector& x_star,
                                    const FeasibleSet& region, int resolution,
                                    int threads) {
  return StrongVsAlphaFromScan(VsScan(game, x_star, region, resolution, threads));
}

std::optional<double> StrongVsAlphaFromScan(const RegionScan& scan) {
  double alpha = std::numeric_limits<double>::infinity();
  Vector x;
  for (std::size_t p = 0; p < scan.grid.size(); ++p) {
    scan.grid.PointInto(p, x);
    const double dist2 = (x - scan.center).squaredNorm();
    if (std::sqrt(dist2) <= kCenterTolerance) continue;
    alpha = std::min(alpha, -scan.s[p] / dist2);
  }
  if (alpha > 0.0 && std::isfinite(alpha)) return alpha;
  return std::nullopt;
}

PureDeviationResult PureDeviationVsCheck(const FiniteGame& game,
                                         const std::vector<int>& a_star) {
  const std::int64_t star = game.ProfileIndex(a_star);
  const double tol = PayoffTolerance(game);
  PureDeviationResult result;
  for (std::int64_t idx = 0; idx < game.num_profiles(); ++idx) {
    if (idx == star) continue;
    const std::vector<int> a = game.ProfileFromIndex(idx);
    double sum = 0.0;
    for (int i = 0; i < game.num_players(); ++i) {
      std::vector<int> swapped = a;
      swapped[i] = a_star[i];
      sum += game.Payoff(i, idx) - game.Payoff(i, swapped);
    }
    if (sum >= -tol) {
      result.holds = false;
      result.witness = a;
      result.witness_sum = sum;
      return result;
    }
  }
  return result;
}

RegionScan LyapunovScanDiscrete(const Game& game, const FeasibleSet& set,
                                const QuadraticLyapunov& lyapunov, double eta,
                                const FeasibleSet& region, int resolution, int threads) {
  if (!(eta > 0.0)) throw ParameterError("step size eta must be positive");
  const Vector& x_star = lyapunov.center();
  CheckRegion(game, region, x_star);
  const std::optional<double> scale = lyapunov.IsotropicScale();
  if (!scale) {
    throw ParameterError(
        "the projection-free bound needs an isotropic Lyapunov matrix Q = q I");
  }
  RegionScan scan = MakeScan(ScanKind::kDiscreteLyapunov, region, resolution, x_star,
                             lyapunov.q());
  scan.eta = eta;
  const Vector f_star = game.Gradient(x_star);
  ParallelFor(scan.grid.size(), threads, [&](std::size_t begin, std::size_t end) {
    Vector x;
    for (std::size_t p = begin; p < end; ++p) {
      scan.grid.PointInto(p, x);
      const Vector f = game.Gradient(x);
      const Vector d = x - x_star;
      const double v = lyapunov.Value(x);
      const Vector next = set.Project(x + eta * f);
      scan.v[p] = v;
      scan.s[p] = f.dot(d);
      scan.delta_v[p] = lyapunov.Value(next) - v;
      scan.delta_v_bar[p] =
          *scale * (eta * eta * (f - f_star).squaredNorm() + 2.0 * eta * scan.s[p]);
      const bool center = d.norm() <= kCenterTolerance;
      scan.in_v[p] = center || (v > 0.0 && scan.delta_v[p] < 0.0);
      scan.in_vbar[p] = center || (v > 0.0 && scan.delta_v_bar[p] < 0.0);
      scan.certifiable[p] = scan.in_v[p] && scan.in_vbar[p];
    }
  });
  for (std::size_t p = 0; p < scan.grid.size(); ++p) {
    const double excess = scan.delta_v[p] - scan.delta_v_bar[p];
    if (excess > 1e-10) {
      ++scan.dominance_violations;
      scan.max_dominance_excess = std::max(scan.max_dominance_excess, excess);
    }
    if (scan.in_vbar[p] && !scan.in_v[p]) ++scan.inclusion_violations;
  }
  SummarizeViolations(scan);
  return scan;
}

RegionScan LyapunovScanContinuous(const Game& game, const QuadraticLyapunov& lyapunov,
                                  const FeasibleSet& region, int resolution,
                                  int threads) {
  const Vector& x_star = lyapunov.center();
  CheckRegion(game, region, x_star);
  RegionScan scan = MakeScan(ScanKind::kContinuousLyapunov, region, resolution, x_star,
                             lyapunov.q());
  ParallelFor(scan.grid.size(), threads, [&](std::size_t begin, std::size_t end) {
    Vector x;
    for (std::size_t p = begin; p < end; ++p) {
      scan.grid.PointInto(p, x);
      const Vector f = game.Gradient(x);
      const Vector d = x - x_star;
      const double v = lyapunov.Value(x);
      const double lie = 2.0 * d.dot(lyapunov.q() * f);
      scan.v[p] = v;
      scan.s[p] = f.dot(d);
      scan.delta_v[p] = lie;
      const bool center = d.norm() <= kCenterTolerance;
      bool member = center;
      if (!center && v > 0.0) {
        if (lie < -1e-12) {
          member = true;
        } else if (lie <= 1e-12) {
          member = DecreasesAlongFlow(game, lyapunov, region, x);
        }
      }
      scan.in_v[p] = member;
      scan.in_vbar[p] = member;
      scan.certifiable[p] = member && (center || !scan.grid.OnBoundary(p));
    }
  });
  SummarizeViolations(scan);
  return scan;
}

double LieDerivative(const Game& game, const QuadraticLyapunov& lyapunov,
                     const Vector& x) {
  game.feasible_set().CheckContains(x, "Lie derivative argument");
  return lyapunov.Gradient(x).dot(game.Gradient(x));
}

std::optional<double> CertifyBasin(RegionScan& scan, const QuadraticLyapunov& lyapunov) {
  if (scan.center.size() != lyapunov.center().size() ||
      (scan.center - lyapunov.center()).norm() > 1e-12 ||
      scan.q.rows() != lyapunov.q().rows() ||
      (scan.q - lyapunov.q()).cwiseAbs().maxCoeff() > 1e-12) {
    throw ParameterError("scan was computed for a different Lyapunov function");
  }
  const std::size_t n = scan.grid.size();
  std::vector<char> center(n, 0);
  Vector x;
  for (std::size_t p = 0; p < n; ++p) {
    scan.grid.PointInto(p, x);
    center[p] = (x - scan.center).norm() <= kCenterTolerance;
  }
  // A point blocks every level at or above its value when it, or one of its
  // lattice neighbors, is not certifiable.
  double limit = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < n; ++p) {
    if (center[p]) continue;
    bool bad = !scan.certifiable[p];
    if (!bad) {
      for (std::size_t q : scan.grid.Neighbors(p)) {
        if (!center[q] && !scan.certifiable[q]) {
          bad = true;
          break;
        }
      }
    }
    if (bad) limit = std::min(limit, scan.v[p]);
  }
  double best = -1.0;
  for (std::size_t p = 0; p < n; ++p) {
    if (center[p]) continue;
    if (scan.v[p] < limit && scan.v[p] > best) best = scan.v[p];
  }
  std::fill(scan.in_uc.begin(), scan.in_uc.end(), 0);
  if (!(best > 0.0)) {
    scan.certified_c.reset();
    return std::nullopt;
  }
  for (std::size_t p = 0; p < n; ++p) scan.in_uc[p] = center[p] || scan.v[p] <= best;
  scan.certified_c = best;
  return best;
}

}  // namespace gdl
