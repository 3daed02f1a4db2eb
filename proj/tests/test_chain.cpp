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

namespace {

std::vector<StateVector> computational_basis(Index dim) {
  std::vector<StateVector> out;
  for (Index n = 0; n < dim; ++n) out.push_back(StateVector::basis_state(dim, n));
  return out;
}

}  // namespace

TEST_CASE("chain of an eigenstate ends in phi_1 (x) xi_1 (x) xi'_1",
          "[chain]") {
  const MeasurementModel model =
      MeasurementModel::canonical({1.0, 2.0}, StateVector::basis_state(2, 0));
  const ChainedModel chained = chain_extend(model, computational_basis(2),
                                            StateVector::basis_state(2, 0));
  const CVector end = chained.final_state(StateVector::basis_state(2, 0));
  CVector expected = CVector::Zero(8);
  expected(0) = 1.0;  // indices (0, 0, 0)
  REQUIRE((end - expected).norm() < 1e-13);
}

TEST_CASE("chain transports superpositions coefficientwise", "[chain]") {
  auto gen = testgen::rng(601);
  for (Index d : {2, 3, 4}) {
    const MeasurementModel model = testgen::random_model(gen, d);
    const auto secondPointer = testgen::random_orthonormal_set(gen, d, d);
    const StateVector secondReady = testgen::random_state(gen, d);
    const ChainedModel chained =
        chain_extend(model, secondPointer, secondReady);
    REQUIRE(chained.constraint_residual() <= 1e-10);

    const StateVector psi = testgen::random_state(gen, d);
    const CVector end = chained.final_state(psi);
    CVector expected = CVector::Zero(chained.total_dim());
    for (std::size_t n = 0; n < model.outcome_count(); ++n) {
      const Complex c = model.object_eigenvector(n).dot(psi.amplitudes());
      expected +=
          c * tensor(tensor(model.object_eigenvector(n),
                            model.pointer_eigenvector(n).amplitudes()),
                     secondPointer[n].amplitudes());
    }
    REQUIRE((end - expected).norm() <= 1e-10);
  }
}

TEST_CASE("three-way outcome table is perfectly correlated", "[chain]") {
  auto gen = testgen::rng(602);
  const MeasurementModel model = testgen::random_model(gen, 2);
  const ChainedModel chained = chain_extend(model, computational_basis(2),
                                            StateVector::basis_state(2, 1));
  const StateVector psi = testgen::random_state(gen, 2);
  const TripleOutcomeDistribution triple = chained.joint_distribution(psi);
  REQUIRE(triple.off_diagonal_mass() <= 1e-12);
  for (std::size_t n = 0; n < 2; ++n) {
    const Complex c = model.object_eigenvector(n).dot(psi.amplitudes());
    REQUIRE(triple.probability(n, n, n) ==
            Catch::Approx(std::norm(c)).margin(1e-12));
  }
}

TEST_CASE("chain marginal agrees with the single-apparatus pointer "
          "distribution",
          "[chain]") {
  auto gen = testgen::rng(603);
  const Index d = 3;
  const MeasurementModel model = testgen::random_model(gen, d);
  const ChainedModel chained = chain_extend(
      model, testgen::random_orthonormal_set(gen, d, d),
      testgen::random_state(gen, d));
  const StateVector psi = testgen::random_state(gen, d);
  const auto marginal = chained.joint_distribution(psi).first_pointer_marginal();
  const OutcomeDistribution single = pointer_distribution(model, psi);
  for (std::size_t n = 0; n < marginal.size(); ++n)
    REQUIRE(std::abs(marginal[n] - single.probability(n)) <= 1e-10);
}

TEST_CASE("chain over a larger first apparatus still satisfies its "
          "constraint",
          "[chain]") {
  auto gen = testgen::rng(604);
  const MeasurementModel model = testgen::random_model(gen, 2, 3, true);
  const ChainedModel chained = chain_extend(model, computational_basis(2),
                                            StateVector::basis_state(2, 0));
  REQUIRE(chained.constraint_residual() <= 1e-10);
  const StateVector psi = testgen::random_state(gen, 2);
  REQUIRE(chained.joint_distribution(psi).off_diagonal_mass() <= 1e-12);
}

TEST_CASE("chain_extend validates the second pointer family", "[chain]") {
  const MeasurementModel model =
      MeasurementModel::canonical({1.0, 2.0}, StateVector::basis_state(2, 0));
  CVector tilted(2);
  tilted << Complex(std::sqrt(0.5), 0.0), Complex(std::sqrt(0.5), 0.0);
  REQUIRE_THROWS_AS(
      chain_extend(model,
                   {StateVector::basis_state(2, 0), StateVector(tilted)},
                   StateVector::basis_state(2, 0)),
      ValidationError);
  REQUIRE_THROWS_AS(
      chain_extend(model, computational_basis(2),
                   StateVector::basis_state(3, 0)),
      DimensionError);
}
