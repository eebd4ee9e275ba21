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

#include "gdl/rng.h"

#include <cmath>

namespace gdl {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  return SplitMix64(seed + stream * 0x9E3779B97F4A7C15ULL);
}

double Rng::Uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int Rng::Categorical(const std::vector<double>& p) {
  double total = 0.0;
  for (double v : p) total += v;
  const double target = Uniform() * total;
  double running = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    running += p[k];
    if (target < running) return static_cast<int>(k);
  }
  // Rounding can leave target == total; return the last positive entry.
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k] > 0.0) return static_cast<int>(k);
  }
  return 0;
}

double Rng::Exponential() { return -std::log1p(-Uniform()); }

Vector Rng::UniformSimplex(int d) {
  Vector x(d);
  for (int k = 0; k < d; ++k) x[k] = Exponential();
  return x / x.sum();
}

}  // namespace gdl
