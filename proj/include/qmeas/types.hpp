// Copyright 2026 The qmeas developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Shared scalar/matrix aliases, default tolerances and the error hierarchy.
 */

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qmeas {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

namespace tol {

// Default tolerance for validity checks (normalization, hermiticity,
// unitarity, projector algebra). All checks accepting a tolerance use this
// as their default.
inline constexpr double kValidity = 1e-10;

// Absolute gap below which two numerically computed eigenvalues are
// considered the same spectral point.
inline constexpr double kEigenvalueCluster = 1e-8;

// Outcome probabilities below this floor are treated as null events;
// conditioning on them is an error.
inline constexpr double kProbabilityFloor = 1e-12;

// Probabilities in [-kProbabilitySlack, 0) are clamped to zero; anything
// more negative is a bug, not roundoff.
inline constexpr double kProbabilitySlack = 1e-12;

}  // namespace tol

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not match the operation's requirements.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A domain-type invariant does not hold (non-unit norm, non-Hermitian
// density matrix, incomplete projector family, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Conditioning on an outcome whose probability is at or below the floor.
class NullEventError : public Error {
 public:
  using Error::Error;
};

// Scenario file cannot be parsed or violates the schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qmeas
