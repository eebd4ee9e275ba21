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

#ifndef GDL_PROJECTION_H_
#define GDL_PROJECTION_H_

#include <vector>

#include "gdl/common.h"
#include "gdl/rng.h"

namespace gdl {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  bool operator==(const Interval&) const = default;
};

// A box or a product of probability simplices, stored as a stacked vector.
class FeasibleSet {
 public:
  enum class Kind { kBox, kSimplexProduct };

  static FeasibleSet Box(std::vector<Interval> bounds);
  static FeasibleSet SimplexProduct(std::vector<int> block_sizes);

  Kind kind() const { return kind_; }
  bool is_box() const { return kind_ == Kind::kBox; }
  int dimension() const { return dimension_; }
  // Box only: one interval per coordinate.
  const std::vector<Interval>& bounds() const { return bounds_; }
  // Simplex product only: block sizes and their offsets in the stacked vector.
  const std::vector<int>& block_sizes() const { return block_sizes_; }
  const std::vector<int>& block_offsets() const { return block_offsets_; }
  int num_blocks() const { return static_cast<int>(block_sizes_.size()); }

  bool Contains(const Vector& x, double tol = kDomainTolerance) const;
  // Throws DimensionError or DomainError naming `what`.
  void CheckContains(const Vector& x, const char* what) const;
  // True iff no inequality constraint is active within `tol`.
  bool IsInterior(const Vector& x, double tol = kActivityTolerance) const;

  // Euclidean projection.
  Vector Project(const Vector& v) const;
  // Absorbs rounding drift of a nearly feasible point: clamps, and rescales
  // simplex blocks to sum one.
  Vector Clean(const Vector& x) const;

  // Uniform mixed profile or box midpoint.
  Vector Center() const;
  // Uniform random point (uniform on each simplex block, uniform on boxes).
  Vector Sample(Rng& rng) const;

  bool operator==(const FeasibleSet&) const = default;

 private:
  Kind kind_ = Kind::kBox;
  int dimension_ = 0;
  std::vector<Interval> bounds_;
  std::vector<int> block_sizes_;
  std::vector<int> block_offsets_;
};

// Projection onto the probability simplex by sort-and-threshold.
Vector ProjectOntoSimplex(const Vector& v);

// Projection of v onto the tangent cone {z : sum(z) = 0, z_k >= 0 for k in
// active} of a single simplex. Exact enumeration of active-face subsets for
// blocks of size at most 12, threshold search otherwise.
Vector ProjectSimplexTangentCone(const Vector& v, const std::vector<int>& active);
// Threshold search variant, valid for any block size.
Vector ProjectSimplexTangentConeByThreshold(const Vector& v,
                                            const std::vector<int>& active);

class TangentCone {
 public:
  // Throws DomainError when x is infeasible beyond kDomainTolerance.
  TangentCone(const FeasibleSet& set, const Vector& base_point);

  const Vector& base_point() const { return base_point_; }
  // Coordinates whose lower bound (box) or nonnegativity (simplex) is tight.
  const std::vector<int>& active_lower() const { return active_lower_; }
  // Box only: coordinates at their upper bound.
  const std::vector<int>& active_upper() const { return active_upper_; }
  bool is_full_space() const {
    return active_lower_.empty() && active_upper_.empty();
  }

  Vector Project(const Vector& v) const;
  bool Contains(const Vector& z, double tol = 1e-12) const;

 private:
  FeasibleSet set_;
  Vector base_point_;
  std::vector<int> active_lower_;
  std::vector<int> active_upper_;
};

Vector ProjectTangentCone(const FeasibleSet& set, const Vector& x,
                          const Vector& v);

// Orthonormal basis of the directions that keep every simplex block summing
// to one; the identity for boxes.
Matrix TangentBasis(const FeasibleSet& set);

}  // namespace gdl

#endif  // GDL_PROJECTION_H_
