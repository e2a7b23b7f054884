// Copyright 2026 The tcqed Authors
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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tcqed/error.hpp"
#include "tcqed/linalg.hpp"

namespace tcqed {
namespace {

TEST_CASE("jacobi diagonalises a 3x3 real symmetric block") {
  CMatrix h = CMatrix::Zero(3, 3);
  h(0, 2) = h(2, 0) = 1.0;
  h(1, 2) = h(2, 1) = 1.0;
  const auto eig = jacobi_eigen(h);
  CHECK(eig.values(0) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
  CHECK(std::abs(eig.values(1)) < 1e-14);
  CHECK(eig.values(2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("jacobi agrees with Eigen on random Hermitian matrices") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
    }
    m = (m + m.adjoint()).eval();
    const auto eig = jacobi_eigen(m);
    Eigen::SelfAdjointEigenSolver<CMatrix> ref(m);
    CHECK((eig.values - ref.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);
    // Reconstruction and orthonormality.
    const CMatrix rebuilt =
        eig.vectors * eig.values.asDiagonal() * eig.vectors.adjoint();
    CHECK((rebuilt - m).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((eig.vectors.adjoint() * eig.vectors - CMatrix::Identity(n, n))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("jacobi handles degenerate and diagonal input") {
  CMatrix id = CMatrix::Identity(4, 4);
  const auto eig = jacobi_eigen(id);
  CHECK((eig.values.array() - 1.0).abs().maxCoeff() < 1e-15);

  CMatrix diag = CMatrix::Zero(3, 3);
  diag(0, 0) = 3.0;
  diag(1, 1) = -1.0;
  diag(2, 2) = 2.0;
  const auto sorted = jacobi_eigen(diag);
  CHECK(sorted.values(0) == -1.0);
  CHECK(sorted.values(1) == 2.0);
  CHECK(sorted.values(2) == 3.0);
}

TEST_CASE("jacobi rejects non-square input") {
  CHECK_THROWS_AS(jacobi_eigen(CMatrix::Zero(2, 3)), NumericalError);
}

TEST_CASE("hermiticity defect") {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = Complex(0.0, 1.0);
  m(1, 0) = Complex(0.0, -1.0);
  CHECK(hermiticity_defect(m) == 0.0);
  m(1, 0) = 0.0;
  CHECK(hermiticity_defect(m) == doctest::Approx(1.0));
}

}  // namespace
}  // namespace tcqed
