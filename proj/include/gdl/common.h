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

#ifndef GDL_COMMON_H_
#define GDL_COMMON_H_

#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace gdl {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Tolerance used to decide whether a point belongs to a feasible set.
inline constexpr double kDomainTolerance = 1e-9;
// Tolerance for declaring an inequality constraint active.
inline constexpr double kActivityTolerance = 1e-10;
// Central finite-difference step.
inline constexpr double kFiniteDifferenceStep = 1e-6;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs of the wrong size or shape.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A point lies outside the domain of an oracle or feasible set.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration or game parameters.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure failed (singular system, divergence).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Malformed input text. Line and column are 1-based; zero when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0,
             std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Worker count for parallel scans: GDL_THREADS when set to a positive
// integer, otherwise the hardware concurrency.
int DefaultThreadCount();

// Formats a vector as "(v0, v1, ...)" with 17 significant digits.
std::string FormatVector(const Vector& v);

// Formats a double with 17 significant digits.
std::string FormatDouble(double value);

}  // namespace gdl

#endif  // GDL_COMMON_H_
