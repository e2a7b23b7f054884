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

#ifndef TCQED_LINALG_HPP_
#define TCQED_LINALG_HPP_

#include <complex>

#include <Eigen/Dense>

namespace tcqed {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Eigenpairs of a Hermitian matrix. `values` ascending, `vectors` holds the
/// matching orthonormal eigenvectors as columns.
struct HermitianEigen {
  RVector values;
  CMatrix vectors;
};

/// Cyclic Jacobi diagonalisation for small dense Hermitian matrices.
///
/// Sweeps over all (p, q) pivots, each rotation being a phase-aligned real
/// Givens rotation, until the off-diagonal Frobenius norm drops below
/// `tolerance` (scaled by max(1, |A|_F)). Only the upper triangle is
/// assumed Hermitian-consistent with the lower one; callers are expected to
/// pass a Hermitian matrix. Throws NumericalError if it fails to converge.
HermitianEigen jacobi_eigen(const CMatrix& matrix, double tolerance = 1e-14);

/// Eigenvalues only, ascending.
RVector hermitian_eigenvalues(const CMatrix& matrix);

/// max_ij |A - A^dagger|.
double hermiticity_defect(const CMatrix& matrix);

}  // namespace tcqed

#endif  // TCQED_LINALG_HPP_
