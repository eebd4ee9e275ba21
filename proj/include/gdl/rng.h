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

#ifndef GDL_RNG_H_
#define GDL_RNG_H_

#include <cstdint>
#include <random>
#include <vector>

#include "gdl/common.h"

namespace gdl {

// SplitMix64 finalizer; a bijective avalanche map on 64-bit words.
std::uint64_t SplitMix64(std::uint64_t x);

// Seed for the independent stream `stream` derived from `seed`:
// SplitMix64(seed + stream * 0x9E3779B97F4A7C15).
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);

// Seedable generator with platform-independent output. The engine is
// std::mt19937_64, whose sequence is fixed by the standard; the
// distributions below are implemented here because the standard library
// ones are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Index k with probability p[k] / sum(p) by inverse CDF.
  int Categorical(const std::vector<double>& p);

  // Standard exponential variate.
  double Exponential();

  // Uniform point on the probability simplex with d entries.
  Vector UniformSimplex(int d);

 private:
  std::mt19937_64 engine_;
};

}  // namespace gdl

#endif  // GDL_RNG_H_
