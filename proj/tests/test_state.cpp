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

#include <catch2/catch_amalgamated.hpp>

#include "qmeas/qmeas.hpp"
#include "support/generators.hpp"

using namespace qmeas;

TEST_CASE("StateVector enforces normalization", "[state]") {
  CVector good(2);
  good << Complex(0.6, 0.0), Complex(0.0, 0.8);
  REQUIRE_NOTHROW(StateVector(good));

  CVector bad(2);
  bad << Complex(0.6, 0.0), Complex(0.0, 0.9);
  REQUIRE_THROWS_AS(StateVector(bad), ValidationError);

  CVector nan(1);
  nan << Complex(std::nan(""), 0.0);
  REQUIRE_THROWS_AS(StateVector(nan), ValidationError);

  REQUIRE_THROWS_AS(StateVector(CVector()), DimensionError);
}

TEST_CASE("StateVector basis states and projectors", "[state]") {
  const StateVector e1 = StateVector::basis_state(3, 1);
  REQUIRE(e1.amplitude(1) == Complex(1.0, 0.0));
  REQUIRE(e1.projector()(1, 1) == Complex(1.0, 0.0));
  REQUIRE(e1.projector().trace() == Complex(1.0, 0.0));
  REQUIRE_THROWS_AS(StateVector::basis_state(3, 3), DimensionError);
}

TEST_CASE("DensityOperator validates hermiticity, trace and positivity",
          "[state]") {
  auto gen = testgen::rng(301);
  REQUIRE_NOTHROW(testgen::random_density(gen, 4));

  // non-Hermitian
  CMatrix m = CMatrix::Identity(2, 2) / 2.0;
  m(0, 1) = Complex(0.1, 0.0);
  REQUIRE_THROWS_AS(DensityOperator(m), ValidationError);

  // wrong trace
  REQUIRE_THROWS_AS(DensityOperator(CMatrix::Identity(2, 2)), ValidationError);

  // Hermitian, unit trace, but indefinite
  CMatrix indefinite = CMatrix::Zero(2, 2);
  indefinite(0, 0) = 1.5;
  indefinite(1, 1) = -0.5;
  REQUIRE_THROWS_AS(DensityOperator(indefinite), ValidationError);
}

TEST_CASE("DensityOperator factories", "[state]") {
  auto gen = testgen::rng(302);
  const StateVector psi = testgen::random_state(gen, 3);
  const DensityOperator rho = DensityOperator::pure(psi);
  REQUIRE(frobenius_distance(rho.matrix(), psi.projector()) == 0.0);
  const DensityOperator mixed = DensityOperator::maximally_mixed(4);
  REQUIRE(mixed.matrix()(0, 0) == Complex(0.25, 0.0));
}

TEST_CASE("OutcomeDistribution accepts roundoff negatives only within the "
          "slack window",
          "[state]") {
  REQUIRE_NOTHROW(OutcomeDistribution({1.0, 2.0}, {1.0 + 5e-13, -5e-13}));
  REQUIRE_THROWS_AS(OutcomeDistribution({1.0, 2.0}, {1.0, -1e-9}),
                    ValidationError);
  REQUIRE_THROWS_AS(OutcomeDistribution({1.0, 2.0}, {0.4, 0.4}),
                    ValidationError);
  REQUIRE_THROWS_AS(OutcomeDistribution({1.0}, {0.5, 0.5}), DimensionError);
}

TEST_CASE("JointOutcomeDistribution computes off-diagonal mass", "[state]") {
  RMatrix table(2, 2);
  table << 0.5, 0.0, 0.125, 0.375;
  const JointOutcomeDistribution joint({1.0, 2.0}, {1.0, 2.0}, table);
  REQUIRE(joint.off_diagonal_mass() == Catch::Approx(0.125).margin(1e-15));
  RMatrix badTable(2, 2);
  badTable << 0.5, 0.0, 0.0, 0.6;
  REQUIRE_THROWS_AS(JointOutcomeDistribution({1.0, 2.0}, {1.0, 2.0}, badTable),
                    ValidationError);
}
