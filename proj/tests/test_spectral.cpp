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
#include "support/oracles.hpp"

using namespace qmeas;

namespace {

CMatrix diag3(double a, double b, double c) {
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

}  // namespace

TEST_CASE("spectral_decompose of a distinct diagonal recovers coordinate "
          "projectors",
          "[spectral]") {
  const SpectralObservable obs = spectral_decompose(diag3(1.0, 2.0, 3.0));
  REQUIRE(obs.size() == 3);
  REQUIRE(obs.eigenvalue(0) == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(obs.eigenvalue(1) == Catch::Approx(2.0).margin(1e-12));
  REQUIRE(obs.eigenvalue(2) == Catch::Approx(3.0).margin(1e-12));
  for (std::size_t n = 0; n < 3; ++n) {
    CMatrix expected = CMatrix::Zero(3, 3);
    expected(static_cast<Index>(n), static_cast<Index>(n)) = 1.0;
    REQUIRE(max_abs(obs.projector(n) - expected) < 1e-12);
  }
}

TEST_CASE("spectral_decompose of the identity clusters into one projector",
          "[spectral]") {
  const SpectralObservable obs = spectral_decompose(CMatrix::Identity(4, 4));
  REQUIRE(obs.size() == 1);
  REQUIRE(obs.eigenvalue(0) == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(max_abs(obs.projector(0) - CMatrix::Identity(4, 4)) < 1e-12);
}

TEST_CASE("spectral_decompose round-trips a constructed Q D Q^dagger",
          "[spectral]") {
  auto gen = testgen::rng(201);
  const CMatrix q = testgen::random_unitary(gen, 4);
  // two distinct values, multiplicities 1 and 3
  CMatrix d = CMatrix::Zero(4, 4);
  d(0, 0) = -1.5;
  d(1, 1) = 2.25;
  d(2, 2) = 2.25;
  d(3, 3) = 2.25;
  const CMatrix h = q * d * q.adjoint();
  const SpectralObservable obs = spectral_decompose(h);
  REQUIRE(obs.size() == 2);
  REQUIRE(obs.eigenvalue(0) == Catch::Approx(-1.5).margin(1e-10));
  REQUIRE(obs.eigenvalue(1) == Catch::Approx(2.25).margin(1e-10));
  REQUIRE(obs.projector(0).trace().real() == Catch::Approx(1.0).margin(1e-10));
  REQUIRE(obs.projector(1).trace().real() == Catch::Approx(3.0).margin(1e-10));
  REQUIRE(frobenius_distance(obs.matrix(), h) <= 1e-8);
}

TEST_CASE("eigenvalue clustering respects the requested tolerance",
          "[spectral]") {
  CMatrix h = CMatrix::Zero(3, 3);
  h(0, 0) = 1.0;
  h(1, 1) = 1.0 + 1e-9;
  h(2, 2) = 2.0;
  const SpectralObservable coarse = spectral_decompose(h, 1e-8);
  REQUIRE(coarse.size() == 2);
  REQUIRE(coarse.projector(0).trace().real() ==
          Catch::Approx(2.0).margin(1e-12));
  const SpectralObservable fine = spectral_decompose(h, 1e-12);
  REQUIRE(fine.size() == 3);
}

TEST_CASE("spectral_decompose rejects non-Hermitian input", "[spectral]") {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  REQUIRE_THROWS_AS(spectral_decompose(m), ValidationError);
}

TEST_CASE("spectral_decompose output satisfies the observable invariants",
          "[spectral]") {
  auto gen = testgen::rng(202);
  for (int rep = 0; rep < 12; ++rep) {
    const Index dim = 2 + rep % 7;  // up to 8
    const CMatrix h = testgen::random_hermitian(gen, dim);
    const SpectralObservable obs = spectral_decompose(h);
    // the constructor enforces idempotence/orthogonality/completeness;
    // check the reconstruction contract explicitly
    REQUIRE(frobenius_distance(obs.matrix(), h) <= 1e-8);
    CMatrix sum = CMatrix::Zero(dim, dim);
    for (std::size_t n = 0; n < obs.size(); ++n) sum += obs.projector(n);
    REQUIRE(max_abs(sum - CMatrix::Identity(dim, dim)) <= 1e-10);
  }
}

TEST_CASE("spectral_decompose handles the degenerate composite observable "
          "A (x) 1",
          "[spectral]") {
  auto gen = testgen::rng(203);
  const SpectralObservable a = testgen::random_nondegenerate_observable(gen, 3);
  const Index m = 2;
  const SpectralObservable composite =
      spectral_decompose(tensor(a.matrix(), CMatrix::Identity(m, m)));
  REQUIRE(composite.size() == 3);
  for (std::size_t n = 0; n < composite.size(); ++n) {
    REQUIRE(composite.eigenvalue(n) ==
            Catch::Approx(a.eigenvalue(n)).margin(1e-8));
    REQUIRE(composite.projector(n).trace().real() ==
            Catch::Approx(static_cast<double>(m)).margin(1e-8));
  }
}

TEST_CASE("SpectralObservable validates its projector family", "[spectral]") {
  // non-idempotent
  REQUIRE_THROWS_AS(
      SpectralObservable({1.0}, {CMatrix::Ones(2, 2)}), ValidationError);
  // duplicate eigenvalues
  CMatrix p0 = CMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  CMatrix p1 = CMatrix::Zero(2, 2);
  p1(1, 1) = 1.0;
  REQUIRE_THROWS_AS(SpectralObservable({1.0, 1.0}, {p0, p1}), ValidationError);
  // incomplete family
  REQUIRE_THROWS_AS(SpectralObservable({1.0}, {p0}), ValidationError);
  // non-orthogonal projectors
  const CVector plus = (StateVector::basis_state(2, 0).amplitudes() +
                        StateVector::basis_state(2, 1).amplitudes()) /
                       std::sqrt(2.0);
  REQUIRE_THROWS_AS(
      SpectralObservable({1.0, 2.0}, {p0, CMatrix(plus * plus.adjoint())}),
      ValidationError);
  // valid complete family passes
  REQUIRE_NOTHROW(SpectralObservable({1.0, 2.0}, {p0, p1}));
}

TEST_CASE("von Neumann entropy of a pure state is zero", "[spectral]") {
  auto gen = testgen::rng(204);
  const DensityOperator rho = DensityOperator::pure(testgen::random_state(gen, 5));
  REQUIRE(von_neumann_entropy(rho) == Catch::Approx(0.0).margin(1e-12));
  REQUIRE(von_neumann_entropy(rho) >= -1e-10);
}

TEST_CASE("von Neumann entropy of the maximally mixed state is ln d",
          "[spectral]") {
  for (Index d : {2, 3, 6}) {
    const DensityOperator rho = DensityOperator::maximally_mixed(d);
    REQUIRE(von_neumann_entropy(rho) ==
            Catch::Approx(std::log(static_cast<double>(d))).margin(1e-12));
  }
}

TEST_CASE("von Neumann entropy matches the scalar oracle on a fixed spectrum",
          "[spectral]") {
  const DensityOperator rho{diag3(0.5, 0.25, 0.25)};
  const double expected =
      oracle::entropy_from_eigenvalues({0.5, 0.25, 0.25});
  // 0.5 ln 2 + 0.5 ln 4, frozen
  REQUIRE(expected == Catch::Approx(1.0397207708399180).margin(1e-15));
  REQUIRE(von_neumann_entropy(rho) == Catch::Approx(expected).margin(1e-12));
}

TEST_CASE("von Neumann entropy is invariant under unitary conjugation",
          "[spectral]") {
  auto gen = testgen::rng(205);
  for (int rep = 0; rep < 8; ++rep) {
    const Index d = 2 + rep % 5;  // up to 6
    const DensityOperator rho = testgen::random_density(gen, d);
    const CMatrix u = testgen::random_unitary(gen, d);
    const DensityOperator conjugated{CMatrix(u * rho.matrix() * u.adjoint())};
    REQUIRE(std::abs(von_neumann_entropy(conjugated) -
                     von_neumann_entropy(rho)) <= 1e-8);
  }
}
