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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
// followed by the individual checks, and exits non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gdl/catalog.h"
#include "gdl/dynamics.h"
#include "gdl/equilibrium.h"
#include "gdl/game_models.h"
#include "gdl/grid.h"
#include "gdl/learning.h"
#include "gdl/projection.h"
#include "gdl/rng.h"
#include "gdl/stability.h"

namespace gdl {
namespace {

Vector Vec(std::initializer_list<double> values) {
  Vector v(static_cast<int>(values.size()));
  int k = 0;
  for (double x : values) v[k++] = x;
  return v;
}

std::string Fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

struct Check {
  std::string what;
  bool pass;
  std::string detail;
};

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  void Add(std::string what, bool pass, std::string detail = "") {
    checks_.push_back({std::move(what), pass, std::move(detail)});
  }

  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
  }

  void Print(int number, double seconds) const {
    std::printf("%s criterion %d: %s (%.1fs)\n", passed() ? "PASS" : "FAIL", number,
                title_.c_str(), seconds);
    for (const Check& c : checks_) {
      std::printf("    [%s] %s%s%s\n", c.pass ? "ok" : "FAILED", c.what.c_str(),
                  c.detail.empty() ? "" : ": ", c.detail.c_str());
    }
    std::fflush(stdout);
  }

 private:
  std::string title_;
  std::vector<Check> checks_;
};

Vector UniformPerturbed(const FeasibleSet& set, Rng& rng) {
  Vector x = set.Center();
  for (int k = 0; k < x.size(); ++k) x[k] += rng.Uniform(-0.01, 0.01);
  return set.Project(x);
}

SimulationConfig Discrete(double eta, int horizon) {
  SimulationConfig c;
  c.step_size = eta;
  c.horizon = horizon;
  return c;
}

SimulationConfig Flow(double final_time) {
  SimulationConfig c;
  c.final_time = final_time;
  c.integrator_step = 1e-3;
  return c;
}

void TullockEquilibrium(Criterion& c) {
  const Game tullock = LoadBuiltin("tullock");
  const FeasibleSet& set = tullock.feasible_set();
  const EquilibriumCandidate eq = FixedPointSolve(tullock, set, 0.1, set.Center());
  const double dist = (eq.point - Vec({0.5, 0.5})).norm();
  c.Add("fixed point (0.5, 0.5) within 1e-6", eq.converged && dist <= 1e-6,
        "found " + FormatVector(eq.point) + ", distance " + Fmt(dist));
  const LinearStabilityResult ls = LinearStability(tullock, Vec({0.5, 0.5}));
  double err = 0.0;
  std::string eig;
  for (const auto& e : ls.eigenvalues) {
    err = std::max(err, std::abs(e - std::complex<double>(-0.5, 0.0)));
    eig += (eig.empty() ? "" : ", ") + Fmt(e.real()) + (e.imag() != 0 ? "+" + Fmt(e.imag()) + "i" : "");
  }
  c.Add("eigenvalues {-0.5, -0.5} within 1e-8", ls.eigenvalues.size() == 2 && err <= 1e-8,
        "got {" + eig + "}");
}

void TullockBasin(Criterion& c) {
  const Game tullock = LoadBuiltin("tullock");
  const FeasibleSet& set = tullock.feasible_set();
  const Vector star = Vec({0.5, 0.5});
  // Spacing 1e-3 on [eps, 1] with eps = 1e-3.
  const int resolution = 1000;
  const RegionScan vs = VsScan(tullock, star, set, resolution);
  const double h = vs.grid.spacing();
  const bool has_radius = vs.violation_free_radius.has_value();
  const double radius = has_radius ? *vs.violation_free_radius : 0.0;
  c.Add("violation-free radius in [0.32, 0.35]", has_radius && radius >= 0.32 && radius <= 0.35,
        "radius " + Fmt(radius) + " at spacing " + Fmt(h));

  const QuadraticLyapunov v(star);
  RegionScan scan = LyapunovScanContinuous(tullock, v, set, resolution);
  const auto cert = CertifyBasin(scan, v);
  const double r = cert ? std::sqrt(*cert) : 0.0;
  c.Add("certified ball radius 1/3 within grid resolution",
        cert.has_value() && std::abs(r - 1.0 / 3.0) <= h,
        "c = " + (cert ? Fmt(*cert) : std::string("none")) + ", radius " + Fmt(r) +
            ", |radius - 1/3| = " + Fmt(std::abs(r - 1.0 / 3.0)) + ", spacing " + Fmt(h));
  c.Add("certified ball contains the radius-1/3 ball", cert.has_value() && r >= 1.0 / 3.0 - h,
        "radius " + Fmt(r));
}

void Spiral(Criterion& c) {
  const Game spiral = LoadBuiltin("spiral");
  const LinearStabilityResult ls = LinearStability(spiral, Vec({0, 0}));
  const double im = 0.75 * std::sqrt(7.0);
  double err = ls.eigenvalues.size() == 2 ? 0.0 : 1.0;
  for (const auto& e : ls.eigenvalues) {
    err = std::max(err, std::min(std::abs(e - std::complex<double>(-0.75, im)),
                                 std::abs(e - std::complex<double>(-0.75, -im))));
  }
  bool conjugate = ls.eigenvalues.size() == 2 &&
                   ls.eigenvalues[0].imag() * ls.eigenvalues[1].imag() < 0;
  c.Add("eigenvalues -0.75 +- 0.75 sqrt(7) i within 1e-8", conjugate && err <= 1e-8,
        "max error " + Fmt(err));

  Matrix q = Matrix::Zero(2, 2);
  q(0, 0) = 1;
  q(1, 1) = 2;
  const QuadraticLyapunov v(Vec({0, 0}), q);
  Rng rng(20261016);
  double lie_err = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Vector x = spiral.feasible_set().Sample(rng);
    const double expected = -2 * (x[0] + x[1]) * (x[0] + x[1]);
    lie_err = std::max(lie_err, std::abs(LieDerivative(spiral, v, x) - expected));
  }
  c.Add("Lie derivative equals -2 (x1 + x2)^2 within 1e-10 at 1000 points", lie_err <= 1e-10,
        "max error " + Fmt(lie_err));

  RegionScan scan = LyapunovScanContinuous(spiral, v, spiral.feasible_set(), 201);
  const auto cert = CertifyBasin(scan, v);
  const double h = scan.grid.spacing();
  // |grad V| is 2 where {V = 1} first meets the box, so a one-cell shift in
  // the boundary moves c by at most 2h.
  c.Add("certified c = 1 on [-1, 1]^2 within grid resolution",
        cert.has_value() && *cert <= 1.0 && *cert >= 1.0 - 2 * h,
        "c = " + (cert ? Fmt(*cert) : std::string("none")) + ", spacing " + Fmt(h));

  const FeasibleSet small = FeasibleSet::Box({{-0.01, 0.01}, {-0.01, 0.01}});
  const RegionScan vs = VsScan(spiral, Vec({0, 0}), small, 21);
  bool violated = false;
  double s = 0.0;
  Vector x;
  for (std::size_t p = 0; p < vs.grid.size(); ++p) {
    vs.grid.PointInto(p, x);
    if (std::abs(x[0] - 1e-3) < 1e-12 && std::abs(x[1] + 1e-3) < 1e-12) {
      violated = !vs.in_v[p];
      s = vs.s[p];
    }
  }
  c.Add("variational violation at (1e-3, -1e-3)", violated, "<F(x), x - x*> = " + Fmt(s));
}

void PrisonersDilemma(Criterion& c) {
  const Game pd = LoadBuiltin("prisoners_dilemma");
  const FiniteGame& finite = pd.finite();
  const FeasibleSet& set = pd.feasible_set();
  const auto pure = EnumeratePureNash(finite);
  const bool unique = pure.size() == 1 && pure[0].profile == std::vector<int>{1, 1} &&
                      pure[0].strict.value_or(false);
  c.Add("unique pure equilibrium (2, 2), strict", unique,
        std::to_string(pure.size()) + " pure equilibria");
  const Vector star = Vec({0, 1, 0, 1});
  const auto alpha = StrongVsAlpha(pd, star, set, 201);
  c.Add("strong VS alpha >= 0.475 over the full grid", alpha && *alpha >= 0.475,
        "alpha " + (alpha ? Fmt(*alpha) : std::string("none")));
  Rng rng(5);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const TrajectoryRecord r = SimulateDiscrete(pd, set, set.Sample(rng), Discrete(0.05, 100000));
    worst = std::max(worst, (r.states.back() - star).norm());
  }
  c.Add("20 random starts converge within 1e-6", worst <= 1e-6,
        "max final distance " + Fmt(worst));
}

void BattleOfSexes(Criterion& c) {
  const Game bos = LoadBuiltin("battle_of_sexes");
  const FiniteGame& finite = bos.finite();
  const FeasibleSet& set = bos.feasible_set();
  const auto pure = EnumeratePureNash(finite);
  int strict = 0;
  for (const auto& e : pure) strict += e.strict.value_or(false);
  c.Add("two strict pure equilibria", pure.size() == 2 && strict == 2,
        std::to_string(strict) + " strict of " + std::to_string(pure.size()));
  const auto mixed = FindMixedEquilibria(finite, 20, 1);
  const Vector expected = Vec({0.4, 0.6, 0.6, 0.4});
  double best = 1e9;
  std::string found;
  for (const auto& e : mixed) {
    if (e.kind != EquilibriumKind::kMixed) continue;
    best = std::min(best, (e.point - expected).cwiseAbs().maxCoeff());
    found += (found.empty() ? "" : " ") + FormatVector(e.point);
  }
  c.Add("mixed equilibrium ((2/5, 3/5), (3/5, 2/5)) within 1e-8", best <= 1e-8,
        "found " + (found.empty() ? std::string("none") : found) + ", distance " + Fmt(best));

  for (const auto& e : pure) {
    const Vector star = e.point;
    const QuadraticLyapunov v(star);
    RegionScan scan = LyapunovScanDiscrete(bos, set, v, 0.05, set, 201);
    const auto cert = CertifyBasin(scan, v);
    c.Add("certified c >= 0.8 at " + FormatVector(star), cert && *cert >= 0.8,
          "c = " + (cert ? Fmt(*cert) : std::string("none")));
    Rng rng(50 + e.profile[0]);
    int converged = 0;
    for (int tested = 0; tested < 50;) {
      const Vector x0 = set.Sample(rng);
      if (v.Value(x0) > 0.8) continue;
      ++tested;
      const TrajectoryRecord r = SimulateDiscrete(bos, set, x0, Discrete(0.05, 100000));
      converged += (r.states.back() - star).norm() <= 1e-6;
    }
    c.Add("50 starts in {V <= 0.8} converge to " + FormatVector(star), converged == 50,
          std::to_string(converged) + "/50");
  }
}

void MatchingPennies(Criterion& c) {
  const Game mp = LoadBuiltin("matching_pennies");
  const FeasibleSet& set = mp.feasible_set();
  const MonotonicityReport report = ComputeMonotonicityReport(mp, set, 2000, 1);
  c.Add("classified monotone", report.classification == MonotonicityClass::kMonotone,
        ToString(report.classification));
  c.Add("all pairwise inner products within 1e-12", report.max_abs_inner_product <= 1e-12,
        "max |inner| " + Fmt(report.max_abs_inner_product));
  c.Add("every pair violates strict monotonicity",
        report.pairs > 0 && report.strict_violations == report.pairs,
        std::to_string(report.strict_violations) + "/" + std::to_string(report.pairs));
  const Vector star = set.Center();
  const TrajectoryRecord r =
      SimulateDiscrete(mp, set, Vec({0.6, 0.4, 0.5, 0.5}), Discrete(0.05, 100));
  bool increasing = r.states.size() >= 101;
  for (std::size_t t = 1; t < r.states.size() && t <= 100; ++t) {
    increasing &= (r.states[t] - star).norm() > (r.states[t - 1] - star).norm();
  }
  c.Add("distance to equilibrium strictly increases for 100 steps", increasing);
}

void Cournot(Criterion& c) {
  const Game cournot = LoadBuiltin("cournot");
  const FeasibleSet& set = cournot.feasible_set();
  const Vector star = Vec({2.0 / 3.0, 2.0 / 3.0});
  const EquilibriumCandidate fp = FixedPointSolve(cournot, set, 0.1, set.Center());
  c.Add("fixed-point solve reaches (2/3, 2/3) within 1e-4", (fp.point - star).norm() <= 1e-4,
        "found " + FormatVector(fp.point));
  const TrajectoryRecord flow = IntegrateLpds(cournot, set, Vec({0.1, 0.9}), Flow(50.0));
  c.Add("LPDS reaches (2/3, 2/3) within 1e-4", (flow.states.back() - star).norm() <= 1e-4,
        "final " + FormatVector(flow.states.back()));
  const MonotonicityReport report = ComputeMonotonicityReport(cournot, set, 2000, 1);
  const double alpha = report.strong_modulus.value_or(0.0);
  c.Add("strong modulus within 5% of 0.5", std::abs(alpha - 0.5) <= 0.025,
        "estimate " + Fmt(alpha));

  const FiniteGame d = Discretize(cournot.continuous(), 8);
  const auto eq = EnumeratePureNash(d);
  std::vector<std::vector<double>> values;
  bool all_weak = true;
  bool all_fail_deviation = true;
  for (const auto& e : eq) {
    values.push_back({d.action_values()[0][e.profile[0]], d.action_values()[1][e.profile[1]]});
    all_weak &= !e.strict.value_or(true);
    all_fail_deviation &= !PureDeviationVsCheck(d, e.profile).holds;
  }
  const std::vector<std::vector<double>> expected = {
      {4.0 / 7, 5.0 / 7}, {5.0 / 7, 4.0 / 7}, {5.0 / 7, 5.0 / 7}};
  bool match = values.size() == expected.size();
  for (std::size_t k = 0; match && k < values.size(); ++k) {
    match = std::abs(values[k][0] - expected[k][0]) < 1e-12 &&
            std::abs(values[k][1] - expected[k][1]) < 1e-12;
  }
  c.Add("discretized equilibria are exactly {(4/7,5/7),(5/7,4/7),(5/7,5/7)}", match,
        std::to_string(eq.size()) + " found");
  c.Add("all discretized equilibria are weak", all_weak);
  c.Add("pure-deviation check fails for each", all_fail_deviation);
}

void ExtendedMatchingPennies(Criterion& c) {
  const Game emp = LoadBuiltin("extended_matching_pennies", {{"r", {1}}, {"q", {2}}});
  const FeasibleSet& set = emp.feasible_set();
  const Vector strict = Vec({1, 0, 0, 1, 0, 0});
  const double edge = 0.5 - 1e-6;
  std::vector<Vector> starts = {Vec({edge, (1 - edge) / 2, (1 - edge) / 2, edge,
                                     (1 - edge) / 2, (1 - edge) / 2})};
  Rng rng(8);
  while (starts.size() < 20) {
    const Vector x = set.Sample(rng);
    if (x[0] <= edge && x[3] <= edge) starts.push_back(x);
  }
  int trapped = 0;
  for (const Vector& x0 : starts) {
    const TrajectoryRecord r = IntegrateLpds(emp, set, x0, Flow(20.0));
    bool ok = true;
    for (std::size_t t = 1; t < r.states.size(); ++t) {
      ok &= r.states[t][0] <= r.states[t - 1][0] + 1e-15;
      ok &= r.states[t][3] <= r.states[t - 1][3] + 1e-15;
    }
    ok &= (r.states.back() - strict).norm() >= (x0 - strict).norm();
    trapped += ok;
  }
  c.Add("starts below 1/2 never increase first components and end no closer",
        trapped == static_cast<int>(starts.size()),
        std::to_string(trapped) + "/" + std::to_string(starts.size()) + " starts");
  const Vector above = Vec({0.6, 0.2, 0.2, 0.6, 0.2, 0.2});
  const TrajectoryRecord r = IntegrateLpds(emp, set, above, Flow(0.01));
  const Vector& next = r.states[1];
  c.Add("starts at 0.6 initially increase both first components",
        next[0] > above[0] && next[3] > above[3], "first step " + FormatVector(next));
}

void Cycling(Criterion& c) {
  for (const char* name : {"milionis_cycle", "weak_pne_cycle"}) {
    const Game game = LoadBuiltin(name);
    const FeasibleSet& set = game.feasible_set();
    Rng rng(DeriveSeed(9, 1000));
    int non_converged = 0;
    std::string classes;
    for (int k = 0; k < 5; ++k) {
      const TrajectoryRecord r =
          SimulateDiscrete(game, set, UniformPerturbed(set, rng), Discrete(0.05, 100000));
      non_converged += r.classification != LimitClass::kConvergedPoint;
      classes += (classes.empty() ? "" : ", ") + ToString(r.classification);
      if (r.classification == LimitClass::kConvergedPoint) {
        classes += " at " + FormatVector(r.states.back());
      }
    }
    c.Add(std::string(name) + " not converged from 5 uniform-perturbed starts",
          non_converged == 5, classes);
  }
}

void PropertySuites(Criterion& c) {
  // Projection.
  {
    Rng rng(10);
    double expansion = 0.0;
    double idempotence = 0.0;
    const std::vector<FeasibleSet> sets = {
        FeasibleSet::SimplexProduct({3, 2, 4}),
        FeasibleSet::Box({{-1, 1}, {0, 2}, {0.5, 0.75}}),
    };
    for (const FeasibleSet& set : sets) {
      const int d = set.dimension();
      for (int k = 0; k < 10000; ++k) {
        const Vector u = 3 * Vector::NullaryExpr(d, [&] { return rng.Uniform(-1, 1); });
        const Vector w = 3 * Vector::NullaryExpr(d, [&] { return rng.Uniform(-1, 1); });
        const Vector pu = set.Project(u);
        const Vector pw = set.Project(w);
        expansion = std::max(expansion, (pu - pw).norm() - (u - w).norm());
        idempotence = std::max(idempotence, (set.Project(pu) - pu).norm());
      }
    }
    c.Add("projection non-expansive and idempotent over 1e4 pairs per set",
          expansion <= 1e-10 && idempotence <= 1e-10,
          "max expansion " + Fmt(expansion) + ", max idempotence error " + Fmt(idempotence));
  }

  // Analytic derivatives against central differences.
  {
    Rng rng(11);
    double worst = 0.0;
    std::string worst_game;
    for (const std::string& name : BuiltinNames()) {
      const Game game = LoadBuiltin(name);
      const FeasibleSet& set = game.feasible_set();
      const std::vector<int> dims = game.player_dims();
      for (int trial = 0; trial < 100; ++trial) {
        Vector x = set.Sample(rng);
        if (set.is_box()) x = set.Center() + 0.9 * (x - set.Center());
        const Vector g = game.Gradient(x);
        int offset = 0;
        for (int i = 0; i < game.num_players(); ++i) {
          for (int k = offset; k < offset + dims[i]; ++k) {
            const double h = 1e-6;
            Vector up = x, down = x;
            up[k] += h;
            down[k] -= h;
            const double fd = (game.Utility(i, up) - game.Utility(i, down)) / (2 * h);
            const double rel = std::abs(fd - g[k]) / std::max(1.0, std::abs(g[k]));
            if (rel > worst) {
              worst = rel;
              worst_game = name;
            }
          }
          offset += dims[i];
        }
        const Matrix j = game.Jacobian(x);
        const Matrix fd =
            FiniteDifferenceJacobian([&](const Vector& z) { return game.Gradient(z); }, x);
        const double rel =
            (fd - j).cwiseAbs().maxCoeff() / std::max(1.0, j.cwiseAbs().maxCoeff());
        if (rel > worst) {
          worst = rel;
          worst_game = name;
        }
      }
    }
    c.Add("gradients and Jacobians match finite differences (rel 1e-5, 100 points per game)",
          worst <= 1e-5, "worst relative error " + Fmt(worst) + " (" + worst_game + ")");
  }

  // Bound dominance and fixed-point residuals at every equilibrium found.
  {
    std::size_t dominance = 0;
    double excess = 0.0;
    std::string where;
    double residual = 0.0;
    int accepted = 0;
    for (const std::string& name : BuiltinNames()) {
      const Game game = LoadBuiltin(name);
      const FeasibleSet& set = game.feasible_set();
      std::vector<Vector> equilibria;
      if (game.is_finite()) {
        for (const auto& e : EnumeratePureNash(game.finite())) equilibria.push_back(e.point);
        for (const auto& e : FindMixedEquilibria(game.finite(), 20, 1)) {
          equilibria.push_back(e.point);
        }
      } else {
        const EquilibriumCandidate e = FixedPointSolve(game, set, 0.1, set.Center(), 1e-12, 1000000);
        if (e.converged && e.vi_gap <= 1e-8) equilibria.push_back(e.point);
      }
      const int resolution = set.dimension() <= 4 ? 41 : 11;
      for (const Vector& star : equilibria) {
        ++accepted;
        residual = std::max(residual, FixedPointResidual(game, set, star, 0.1));
        const RegionScan scan =
            LyapunovScanDiscrete(game, set, QuadraticLyapunov(star), 0.05, set, resolution);
        if (scan.dominance_violations > 0) {
          dominance += scan.dominance_violations;
          excess = std::max(excess, scan.max_dominance_excess);
          where += (where.empty() ? "" : ", ") + name + " " + FormatVector(star);
        }
      }
    }
    c.Add("bound dominates the true Lyapunov change on every scan grid point (tol 1e-10)",
          dominance == 0,
          std::to_string(dominance) + " violating points, max excess " + Fmt(excess) +
              (where.empty() ? "" : ", at " + where));
    c.Add("fixed-point residual <= 1e-8 at every accepted equilibrium", residual <= 1e-8,
          std::to_string(accepted) + " equilibria, max residual " + Fmt(residual));
  }

  // Pure-deviation criterion against the grid scan verdict.
  {
    int agree = 0;
    int total = 0;
    std::string mismatches;
    for (const std::string& name : BuiltinNames()) {
      const Game game = LoadBuiltin(name);
      if (!game.is_finite()) continue;
      const FiniteGame& finite = game.finite();
      const int resolution = finite.total_dimension() <= 4 ? 41 : 11;
      for (std::int64_t idx = 0; idx < finite.num_profiles(); ++idx) {
        const std::vector<int> a = finite.ProfileFromIndex(idx);
        const RegionScan scan =
            VsScan(game, finite.PureProfilePoint(a), game.feasible_set(), resolution);
        ++total;
        if (PureDeviationVsCheck(finite, a).holds == (scan.violation_count == 0)) {
          ++agree;
        } else {
          mismatches += " " + name + ":" + std::to_string(idx);
        }
      }
    }
    c.Add("pure-deviation check agrees with grid VS scan on all catalog finite games",
          agree == total, std::to_string(agree) + "/" + std::to_string(total) + mismatches);
  }
}

void Learning(Criterion& c) {
  const FiniteGame pd = LoadBuiltin("prisoners_dilemma").finite();
  const int rounds = 50000;
  std::string freqs;
  bool pd_ok = true;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const PlayHistory h = SimulateSelfPlay(pd, {}, rounds, seed);
    int hits = 0;
    for (int t = rounds - rounds / 10; t < rounds; ++t) hits += h.actions[t] == std::vector<int>{1, 1};
    const double freq = hits / static_cast<double>(rounds / 10);
    pd_ok &= freq >= 0.8;
    freqs += (freqs.empty() ? "" : ", ") + Fmt(freq);
  }
  c.Add("PD last-decile frequency of (2, 2) >= 0.8 for 5 seeds", pd_ok, freqs);

  const FiniteGame mp = LoadBuiltin("matching_pennies").finite();
  const int long_rounds = 100000;
  const PlayHistory h = SimulateSelfPlay(mp, {}, long_rounds, 1);
  bool regret_ok = true;
  bool average_ok = true;
  std::string detail;
  for (int i = 0; i < 2; ++i) {
    const double per_round = ExternalRegret(h, mp, i) / long_rounds;
    const double dev = (AverageStrategy(h, i).array() - 0.5).abs().maxCoeff();
    regret_ok &= per_round <= 0.05;
    average_ok &= dev <= 0.1;
    detail += "player " + std::to_string(i + 1) + ": R/T " + Fmt(per_round) +
              ", average deviation " + Fmt(dev) + "; ";
  }
  c.Add("MP regret per round <= 0.05", regret_ok, detail);
  c.Add("MP time-averaged strategies within 0.1 of uniform", average_ok);
}

}  // namespace
}  // namespace gdl

int main() {
  using gdl::Criterion;
  struct Entry {
    const char* title;
    std::function<void(Criterion&)> run;
  };
  const std::vector<Entry> entries = {
      {"Tullock equilibrium and linearization", gdl::TullockEquilibrium},
      {"Tullock variational region and certified ball", gdl::TullockBasin},
      {"Spiral eigenvalues, Lie derivative, certificate, VS violation", gdl::Spiral},
      {"Prisoner's Dilemma", gdl::PrisonersDilemma},
      {"Battle of Sexes equilibria and basins", gdl::BattleOfSexes},
      {"Matching Pennies", gdl::MatchingPennies},
      {"Cournot continuous and discretized", gdl::Cournot},
      {"Extended Matching Pennies trap", gdl::ExtendedMatchingPennies},
      {"Cycling matrix games", gdl::Cycling},
      {"Property suites", gdl::PropertySuites},
      {"Exp3 self-play", gdl::Learning},
  };
  int failed = 0;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    Criterion c(entries[k].title);
    const auto start = std::chrono::steady_clock::now();
    try {
      entries[k].run(c);
    } catch (const std::exception& e) {
      c.Add("unexpected exception", false, e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.Print(static_cast<int>(k + 1), seconds);
    failed += !c.passed();
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(entries.size()) - failed,
              entries.size());
  return failed == 0 ? 0 : 1;
}
