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

#ifndef GDL_GRID_H_
#define GDL_GRID_H_

#include <cstddef>
#include <vector>

#include "gdl/common.h"
#include "gdl/projection.h"

namespace gdl {

// Regular lattice over a feasible set. Box coordinates get `resolution`
// evenly spaced values including both bounds; each simplex block gets the
// barycentric lattice with step 1 / (resolution - 1), whose edges carry
// `resolution` points. Points are ordered with the first coordinate (or
// block) most significant. Neighbors differ by one step in one box
// coordinate, or by moving one lattice step of mass between two entries of a
// simplex block.
class Grid {
 public:
  Grid(const FeasibleSet& set, int resolution);

  const FeasibleSet& set() const { return set_; }
  int resolution() const { return resolution_; }
  std::size_t size() const { return size_; }
  int dimension() const { return set_.dimension(); }
  // Largest distance between adjacent lattice values in any coordinate.
  double spacing() const { return spacing_; }

  Vector Point(std::size_t index) const;
  void PointInto(std::size_t index, Vector& out) const;
  std::vector<std::size_t> Neighbors(std::size_t index) const;
  // True when some inequality of the set is tight at the point.
  bool OnBoundary(std::size_t index) const;

 private:
  struct Factor {
    int offset = 0;
    int width = 0;
    std::size_t stride = 1;
    std::vector<Vector> points;
    std::vector<std::vector<int>> neighbors;
    std::vector<char> boundary;
  };

  int Digit(const Factor& f, std::size_t index) const {
    return static_cast<int>((index / f.stride) % f.points.size());
  }

  FeasibleSet set_;
  int resolution_;
  std::size_t size_ = 1;
  double spacing_ = 0.0;
  std::vector<Factor> factors_;
};

}  // namespace gdl

#endif  // GDL_GRID_H_
