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

#include "gdl/projection.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace gdl {

FeasibleSet FeasibleSet::Box(std::vector<Interval> bounds) {
  if (bounds.empty()) throw DimensionError("box must have at least one coordinate");
  for (const Interval& b : bounds) {
    if (!std::isfinite(b.lo) || !std::isfinite(b.hi) || b.lo > b.hi) {
      throw ParameterError("box interval must be finite with lo <= hi");
    }
  }
  FeasibleSet set;
  set.kind_ = Kind::kBox;
  set.dimension_ = static_cast<int>(bounds.size());
  set.bounds_ = std::move(bounds);
  return set;
}

FeasibleSet FeasibleSet::SimplexProduct(std::vector<int> block_sizes) {
  if (block_sizes.empty()) {
    throw DimensionError("simplex product must have at least one block");
  }
  FeasibleSet set;
  set.kind_ = Kind::kSimplexProduct;
  int offset = 0;
  for (int d : block_sizes) {
    if (d < 1) throw DimensionError("simplex block size must be positive");
    set.block_offsets_.push_back(offset);
    offset += d;
  }
  set.dimension_ = offset;
  set.block_sizes_ = std::move(block_sizes);
  return set;
}

bool FeasibleSet::Contains(const Vector& x, double tol) const {
  if (x.size() != dimension_) return false;
  if (!x.allFinite()) return false;
  if (is_box()) {
    for (int k = 0; k < dimension_; ++k) {
      if (x[k] < bounds_[k].lo - tol || x[k] > bounds_[k].hi + tol) return false;
    }
    return true;
  }
  for (int b = 0; b < num_blocks(); ++b) {
    auto block = x.segment(block_offsets_[b], block_sizes_[b]);
    if (block.minCoeff() < -tol || block.maxCoeff() > 1.0 + tol) return false;
    if (std::abs(block.sum() - 1.0) > tol) return false;
  }
  return true;
}

void FeasibleSet::CheckContains(const Vector& x, const char* what) const {
  if (x.size() != dimension_) {
    throw DimensionError(std::string(what) + ": expected dimension " +
                         std::to_string(dimension_) + ", got " +
                         std::to_string(x.size()));
  }
  if (!Contains(x)) {
    throw DomainError(std::string(what) + " " + FormatVector(x) +
                      " is outside the feasible set");
  }
}

bool FeasibleSet::IsInterior(const Vector& x, double tol) const {
  if (is_box()) {
    for (int k = 0; k < dimension_; ++k) {
      if (x[k] <= bounds_[k].lo + tol || x[k] >= bounds_[k].hi - tol) return false;
    }
    return true;
  }
  return x.minCoeff() > tol;
}

Vector FeasibleSet::Project(const Vector& v) const {
  if (v.size() != dimension_) {
    throw DimensionError("projection: expected dimension " +
                         std::to_string(dimension_) + ", got " +
                         std::to_string(v.size()));
  }
  Vector out(dimension_);
  if (is_box()) {
    for (int k = 0; k < dimension_; ++k) {
      out[k] = std::clamp(v[k], bounds_[k].lo, bounds_[k].hi);
    }
    return out;
  }
  for (int b = 0; b < num_blocks(); ++b) {
    out.segment(block_offsets_[b], block_sizes_[b]) =
        ProjectOntoSimplex(v.segment(block_offsets_[b], block_sizes_[b]));
  }
  return out;
}

Vector FeasibleSet::Clean(const Vector& x) const {
  Vector out = x;
  if (is_box()) {
    for (int k = 0; k < dimension_; ++k) {
      out[k] = std::clamp(out[k], bounds_[k].lo, bounds_[k].hi);
    }
    return out;
  }
  for (int b = 0; b < num_blocks(); ++b) {
    auto block = out.segment(block_offsets_[b], block_sizes_[b]);
    block = block.cwiseMax(0.0);
    const double total = block.sum();
    if (total <= 0.0) {
      throw DomainError("simplex block has no positive mass");
    }
    block /= total;
  }
  return out;
}

Vector FeasibleSet::Center() const {
  Vector out(dimension_);
  if (is_box()) {
    for (int k = 0; k < dimension_; ++k) {
      out[k] = 0.5 * (bounds_[k].lo + bounds_[k].hi);
    }
    return out;
  }
  for (int b = 0; b < num_blocks(); ++b) {
    out.segment(block_offsets_[b], block_sizes_[b])
        .setConstant(1.0 / block_sizes_[b]);
  }
  return out;
}

Vector FeasibleSet::Sample(Rng& rng) const {
  Vector out(dimension_);
  if (is_box()) {
    for (int k = 0; k < dimension_; ++k) {
      out[k] = rng.Uniform(bounds_[k].lo, bounds_[k].hi);
    }
    return out;
  }
  for (int b = 0; b < num_blocks(); ++b) {
    out.segment(block_offsets_[b], block_sizes_[b]) =
        rng.UniformSimplex(block_sizes_[b]);
  }
  return out;
}

Vector ProjectOntoSimplex(const Vector& v) {
  const int d = static_cast<int>(v.size());
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&v](int a, int b) { return v[a] > v[b]; });
  double running = 0.0;
  double theta = 0.0;
  for (int j = 0; j < d; ++j) {
    running += v[order[j]];
    const double candidate = (running - 1.0) / (j + 1);
    if (v[order[j]] - candidate > 0.0) theta = candidate;
  }
  return (v.array() - theta).cwiseMax(0.0).matrix();
}

namespace {

// Sum of |entries| plus one; scales the KKT acceptance tolerance.
double Scale(const Vector& v) { return 1.0 + v.cwiseAbs().maxCoeff(); }

}  // namespace

Vector ProjectSimplexTangentConeByThreshold(const Vector& v,
                                            const std::vector<int>& active) {
  const int d = static_cast<int>(v.size());
  std::vector<char> is_active(d, 0);
  for (int k : active) is_active[k] = 1;
  double free_sum = 0.0;
  int free_count = 0;
  std::vector<double> active_values;
  for (int k = 0; k < d; ++k) {
    if (is_active[k]) {
      active_values.push_back(v[k]);
    } else {
      free_sum += v[k];
      ++free_count;
    }
  }
  if (free_count == 0) {
    throw DomainError("tangent cone: every coordinate of a simplex block is active");
  }
  std::sort(active_values.begin(), active_values.end(), std::greater<>());
  // The shift mu solves sum_free (v - mu) + sum_active max(v - mu, 0) = 0;
  // the left side is strictly decreasing in mu, so exactly one count j of
  // active entries above mu is consistent.
  double mu = free_sum / free_count;
  double sum = free_sum;
  for (std::size_t j = 0; j <= active_values.size(); ++j) {
    mu = sum / static_cast<double>(free_count + j);
    const bool below_previous = j == 0 || mu <= active_values[j - 1];
    const bool above_next = j == active_values.size() || mu >= active_values[j];
    if (below_previous && above_next) break;
    if (j < active_values.size()) sum += active_values[j];
  }
  Vector z(d);
  for (int k = 0; k < d; ++k) {
    z[k] = is_active[k] ? std::max(v[k] - mu, 0.0) : v[k] - mu;
  }
  return z;
}

Vector ProjectSimplexTangentCone(const Vector& v, const std::vector<int>& active) {
  const int d = static_cast<int>(v.size());
  if (d > 12 || active.size() > 12) {
    return ProjectSimplexTangentConeByThreshold(v, active);
  }
  const double tol = 1e-13 * Scale(v);
  const int na = static_cast<int>(active.size());
  std::vector<char> pinned(d, 0);
  // Try every subset S of the active set with z_S = 0; the remaining
  // coordinates receive v minus their mean. The first subset satisfying the
  // KKT sign conditions is the unique minimizer.
  for (unsigned mask = 0; mask < (1u << na); ++mask) {
    std::fill(pinned.begin(), pinned.end(), 0);
    for (int j = 0; j < na; ++j) {
      if (mask & (1u << j)) pinned[active[j]] = 1;
    }
    double sum = 0.0;
    int count = 0;
    for (int k = 0; k < d; ++k) {
      if (!pinned[k]) {
        sum += v[k];
        ++count;
      }
    }
    if (count == 0) continue;
    const double mu = sum / count;
    bool ok = true;
    for (int j = 0; j < na && ok; ++j) {
      const int k = active[j];
      // Pinned coordinates need a nonnegative multiplier mu - v_k; free
      // active coordinates need z_k = v_k - mu >= 0.
      ok = pinned[k] ? (mu - v[k] >= -tol) : (v[k] - mu >= -tol);
    }
    if (!ok) continue;
    Vector z(d);
    for (int k = 0; k < d; ++k) z[k] = pinned[k] ? 0.0 : v[k] - mu;
    for (int k : active) z[k] = std::max(z[k], 0.0);
    return z;
  }
  return ProjectSimplexTangentConeByThreshold(v, active);
}

TangentCone::TangentCone(const FeasibleSet& set, const Vector& base_point)
    : set_(set), base_point_(base_point) {
  set.CheckContains(base_point, "tangent cone base point");
  if (set.is_box()) {
    for (int k = 0; k < set.dimension(); ++k) {
      if (base_point[k] <= set.bounds()[k].lo + kActivityTolerance) {
        active_lower_.push_back(k);
      }
      if (base_point[k] >= set.bounds()[k].hi - kActivityTolerance) {
        active_upper_.push_back(k);
      }
    }
    return;
  }
  for (int k = 0; k < set.dimension(); ++k) {
    if (base_point[k] <= kActivityTolerance) active_lower_.push_back(k);
  }
}

Vector TangentCone::Project(const Vector& v) const {
  if (v.size() != set_.dimension()) {
    throw DimensionError("tangent cone: velocity has wrong dimension");
  }
  if (set_.is_box()) {
    Vector z = v;
    for (int k : active_lower_) z[k] = std::max(z[k], 0.0);
    for (int k : active_upper_) z[k] = std::min(z[k], 0.0);
    return z;
  }
  Vector z(v.size());
  std::size_t next = 0;
  for (int b = 0; b < set_.num_blocks(); ++b) {
    const int offset = set_.block_offsets()[b];
    const int size = set_.block_sizes()[b];
    std::vector<int> local;
    while (next < active_lower_.size() && active_lower_[next] < offset + size) {
      local.push_back(active_lower_[next] - offset);
      ++next;
    }
    if (local.empty()) {
      auto block = v.segment(offset, size);
      z.segment(offset, size) = block.array() - block.mean();
    } else {
      z.segment(offset, size) =
          ProjectSimplexTangentCone(v.segment(offset, size), local);
    }
  }
  return z;
}

bool TangentCone::Contains(const Vector& z, double tol) const {
  if (z.size() != set_.dimension()) return false;
  for (int k : active_lower_) {
    if (z[k] < -tol) return false;
  }
  for (int k : active_upper_) {
    if (z[k] > tol) return false;
  }
  if (!set_.is_box()) {
    for (int b = 0; b < set_.num_blocks(); ++b) {
      if (std::abs(z.segment(set_.block_offsets()[b], set_.block_sizes()[b]).sum()) >
          tol) {
        return false;
      }
    }
  }
  return true;
}

Vector ProjectTangentCone(const FeasibleSet& set, const Vector& x,
                          const Vector& v) {
  return TangentCone(set, x).Project(v);
}

Matrix TangentBasis(const FeasibleSet& set) {
  const int dim = set.dimension();
  if (set.is_box()) return Matrix::Identity(dim, dim);
  Matrix basis = Matrix::Zero(dim, dim - set.num_blocks());
  int column = 0;
  for (int b = 0; b < set.num_blocks(); ++b) {
    const int d = set.block_sizes()[b];
    if (d == 1) continue;
    Matrix spanning = Matrix::Zero(d, d - 1);
    for (int k = 0; k < d - 1; ++k) {
      spanning(k, k) = 1.0;
      spanning(d - 1, k) = -1.0;
    }
    Eigen::HouseholderQR<Matrix> qr(spanning);
    const Matrix q = qr.householderQ() * Matrix::Identity(d, d - 1);
    basis.block(set.block_offsets()[b], column, d, d - 1) = q;
    column += d - 1;
  }
  return basis;
}

}  // namespace gdl
