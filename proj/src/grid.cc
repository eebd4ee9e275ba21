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

#include "gdl/grid.h"

#include <map>
#include <string>

namespace gdl {

namespace {

constexpr std::size_t kMaxGridPoints = 100000000;

// All compositions of `total` into `parts` nonnegative integers, in
// lexicographic order with the first entry descending.
void Compositions(int total, int parts, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    current.push_back(first);
    Compositions(total - first, parts - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

Grid::Grid(const FeasibleSet& set, int resolution) : set_(set), resolution_(resolution) {
  if (resolution < 2) throw ParameterError("grid resolution must be at least 2");
  const int steps = resolution - 1;
  if (set.is_box()) {
    for (int k = 0; k < set.dimension(); ++k) {
      Factor f;
      f.offset = k;
      f.width = 1;
      const Interval b = set.bounds()[k];
      for (int j = 0; j < resolution; ++j) {
        const double v = j == steps ? b.hi : b.lo + (b.hi - b.lo) * (static_cast<double>(j) / steps);
        f.points.push_back(Vector::Constant(1, v));
        f.boundary.push_back(j == 0 || j == steps);
        std::vector<int> nb;
        if (j > 0) nb.push_back(j - 1);
        if (j < steps) nb.push_back(j + 1);
        f.neighbors.push_back(std::move(nb));
      }
      spacing_ = std::max(spacing_, (b.hi - b.lo) / steps);
      factors_.push_back(std::move(f));
    }
  } else {
    spacing_ = 1.0 / steps;
    for (int b = 0; b < set.num_blocks(); ++b) {
      Factor f;
      f.offset = set.block_offsets()[b];
      f.width = set.block_sizes()[b];
      std::vector<std::vector<int>> comps;
      std::vector<int> current;
      Compositions(steps, f.width, current, comps);
      std::map<std::vector<int>, int> lookup;
      for (int j = 0; j < static_cast<int>(comps.size()); ++j) lookup[comps[j]] = j;
      for (const auto& c : comps) {
        Vector p(f.width);
        bool on_boundary = false;
        for (int k = 0; k < f.width; ++k) {
          p[k] = c[k] == steps ? 1.0 : static_cast<double>(c[k]) / steps;
          on_boundary = on_boundary || (c[k] == 0 && f.width > 1);
        }
        std::vector<int> nb;
        for (int from = 0; from < f.width; ++from) {
          if (c[from] == 0) continue;
          for (int to = 0; to < f.width; ++to) {
            if (to == from) continue;
            std::vector<int> moved = c;
            --moved[from];
            ++moved[to];
            nb.push_back(lookup.at(moved));
          }
        }
        f.points.push_back(std::move(p));
        f.boundary.push_back(on_boundary);
        f.neighbors.push_back(std::move(nb));
      }
      factors_.push_back(std::move(f));
    }
  }
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    it->stride = size_;
    if (size_ > kMaxGridPoints / it->points.size()) {
      throw ParameterError("grid with resolution " + std::to_string(resolution) +
                           " exceeds 1e8 points");
    }
    size_ *= it->points.size();
  }
}

void Grid::PointInto(std::size_t index, Vector& out) const {
  out.resize(set_.dimension());
  for (const Factor& f : factors_) {
    out.segment(f.offset, f.width) = f.points[Digit(f, index)];
  }
}

Vector Grid::Point(std::size_t index) const {
  Vector out;
  PointInto(index, out);
  return out;
}

std::vector<std::size_t> Grid::Neighbors(std::size_t index) const {
  std::vector<std::size_t> out;
  for (const Factor& f : factors_) {
    const int digit = Digit(f, index);
    const std::size_t base = index - static_cast<std::size_t>(digit) * f.stride;
    for (int nb : f.neighbors[digit]) out.push_back(base + nb * f.stride);
  }
  return out;
}

bool Grid::OnBoundary(std::size_t index) const {
  for (const Factor& f : factors_) {
    if (f.boundary[Digit(f, index)]) return true;
  }
  return false;
}

}  // namespace gdl
