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

#ifndef GDL_STABILITY_H_
#define GDL_STABILITY_H_

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gdl/common.h"
#include "gdl/game_models.h"
#include "gdl/grid.h"
#include "gdl/projection.h"

namespace gdl {

// V(x) = (x - x*)' Q (x - x*).
class QuadraticLyapunov {
 public:
  explicit QuadraticLyapunov(Vector center);
  // Throws ParameterError unless Q is symmetric within 1e-12 and positive
  // definite, DimensionError on size mismatch.
  QuadraticLyapunov(Vector center, Matrix q);

  const Vector& center() const { return center_; }
  const Matrix& q() const { return q_; }
  // q when Q = q I, otherwise empty.
  std::optional<double> IsotropicScale() const;

  double Value(const Vector& x) const;
  Vector Gradient(const Vector& x) const;

 private:
  Vector center_;
  Matrix q_;
};

enum class StabilityVerdict {
  kAsymptoticallyStable,
  kUnstable,
  kMarginal,
  // The point is on the boundary; linearization says nothing there.
  kNotApplicable,
};
std::string ToString(StabilityVerdict v);

struct LinearStabilityResult {
  // Eigenvalues of B' J(x*) B for an orthonormal basis B of the tangent
  // space, sorted by real then imaginary part.
  std::vector<std::complex<double>> eigenvalues;
  StabilityVerdict verdict = StabilityVerdict::kNotApplicable;
  bool interior = false;
  std::string note;
};

LinearStabilityResult LinearStability(const Game& game, const Vector& x_star);

enum class ScanKind { kVariational, kDiscreteLyapunov, kContinuousLyapunov };
std::string ToString(ScanKind kind);

// Per-point evaluations on a grid. Entries that do not apply to the scan kind
// are NaN. For continuous scans `delta_v` holds the Lie derivative.
struct RegionScan {
  ScanKind kind = ScanKind::kVariational;
  Grid grid;
  Vector center;
  Matrix q;
  double eta = 0.0;

  std::vector<double> v;
  std::vector<double> s;
  std::vector<double> delta_v;
  std::vector<double> delta_v_bar;
  // Discrete: V > 0 and dV < 0. Continuous: Lie derivative negative (or zero
  // with V strictly decreasing along a short flow) at an interior point.
  // Variational: s < 0. The center is always a member.
  std::vector<char> in_v;
  // Discrete: V > 0 and dVbar < 0. Otherwise equal to in_v.
  std::vector<char> in_vbar;
  // Points admitted to the certificate; set by CertifyBasin.
  std::vector<char> in_uc;
  // Points eligible for certification: in_v and in_vbar.
  std::vector<char> certifiable;

  // Points other than the center with s >= 0.
  std::size_t violation_count = 0;
  // Distance from the center to the nearest violation; empty when there is none.
  std::optional<double> violation_free_radius;
  // Discrete scans: points where dVbar < dV - 1e-10, and the largest excess.
  std::size_t dominance_violations = 0;
  double max_dominance_excess = 0.0;
  // Discrete scans: points of the Vbar mask outside the V mask.
  std::size_t inclusion_violations = 0;
  std::optional<double> certified_c;

  explicit RegionScan(Grid g) : grid(std::move(g)) {}
  bool IsCenter(std::size_t index) const;
};

// s(x) = <F(x), x - x*> over the grid of `region`.
RegionScan VsScan(const Game& game, const Vector& x_star, const FeasibleSet& region,
                  int resolution, int threads = 0);

// inf over grid points farther than 1e-9 from x* of -s(x) / ||x - x*||^2,
// when positive.
std::optional<double> StrongVsAlpha(const Game& game, const Vector& x_star,
                                    const FeasibleSet& region, int resolution,
                                    int threads = 0);

// The same infimum computed from an existing variational scan.
std::optional<double> StrongVsAlphaFromScan(const RegionScan& scan);

struct PureDeviationResult {
  bool holds = true;
  std::vector<int> witness;
  double witness_sum = 0.0;
};

// Checks sum_i (u_i(a) - u_i(a*_i, a_-i)) < 0 for every pure a != a*.
PureDeviationResult PureDeviationVsCheck(const FiniteGame& game,
                                         const std::vector<int>& a_star);

// Exact dV with projection and the projection-free bound
// dVbar = q (eta^2 ||F(x) - F(x*)||^2 + 2 eta <F(x), x - x*>). Requires Q = q I.
RegionScan LyapunovScanDiscrete(const Game& game, const FeasibleSet& set,
                                const QuadraticLyapunov& lyapunov, double eta,
                                const FeasibleSet& region, int resolution,
                                int threads = 0);

// Lie derivative scan for continuous time. Boundary points of the region are
// never certifiable.
RegionScan LyapunovScanContinuous(const Game& game, const QuadraticLyapunov& lyapunov,
                                  const FeasibleSet& region, int resolution,
                                  int threads = 0);

// grad V(x) . F(x) = 2 (x - x*)' Q F(x).
double LieDerivative(const Game& game, const QuadraticLyapunov& lyapunov,
                     const Vector& x);

// Largest grid value c such that every grid point with V <= c and all of its
// grid neighbors are certifiable. Stores c and the in_uc mask in the scan.
// Returns empty when no positive level qualifies. Throws ParameterError if
// the scan was computed for a different V.
std::optional<double> CertifyBasin(RegionScan& scan, const QuadraticLyapunov& lyapunov);

}  // namespace gdl

#endif  // GDL_STABILITY_H_
