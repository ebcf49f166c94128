// Copyright 2026 The qdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDIST_ERRORS_HPP
#define QDIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qdist {

// Numerical tolerances shared across modules.
inline constexpr double kOperatorTolerance = 1e-10;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kProbabilityTolerance = 1e-10;
inline constexpr double kNegativeProbabilityTolerance = 1e-12;
inline constexpr std::size_t kDefaultDimensionCap = std::size_t{1} << 20;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument value failed (not normalized, not orthogonal, out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidMeasurement : public Error {
 public:
  using Error::Error;
};

/// Two measurements whose projectors do not commute were combined.
class IncompatibleMeasurements : public Error {
 public:
  using Error::Error;
};

class LabelMismatch : public Error {
 public:
  using Error::Error;
};

/// A truncated Fock space is too small for the requested state or shift.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check between two computation routes disagreed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace qdist

#endif  // QDIST_ERRORS_HPP
