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

#include "tcqed/measures.hpp"

#include <algorithm>
#include <cmath>

namespace tcqed {

Matrix2c pauli_matrix(Pauli p) {
  const Complex i(0.0, 1.0);
  Matrix2c m;
  switch (p) {
    case Pauli::kI:
      m << 1, 0, 0, 1;
      break;
    case Pauli::kX:
      m << 0, 1, 1, 0;
      break;
    case Pauli::kY:
      m << 0, -i, i, 0;
      break;
    case Pauli::kZ:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Matrix4c on_first_qubit(const Matrix2c& u) {
  Matrix4c m = Matrix4c::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      m(2 * i, 2 * j) = u(i, j);
      m(2 * i + 1, 2 * j + 1) = u(i, j);
    }
  }
  return m;
}

double impurity(const CMatrix& rho) { return 1.0 - rho.squaredNorm(); }
double impurity(const TwoQubitDensity& rho) {
  return 1.0 - rho.matrix().squaredNorm();
}
double impurity(const SingleQubitDensity& rho) {
  return 1.0 - rho.matrix().squaredNorm();
}

ImpurityTriple impurities(const TwoQubitDensity& rho12) {
  return ImpurityTriple{impurity(rho12),
                        impurity(trace_atom(rho12, Qubit::kFirst)),
                        impurity(trace_atom(rho12, Qubit::kSecond))};
}

double von_neumann_entropy(const CMatrix& rho) {
  double s = 0.0;
  for (double lambda : hermitian_eigenvalues(rho)) {
    if (lambda >= 1e-12) s -= lambda * std::log2(lambda);
  }
  return s;
}

double von_neumann_entropy(const TwoQubitDensity& rho) {
  return von_neumann_entropy(CMatrix(rho.matrix()));
}

Matrix4c partial_transpose(const Matrix4c& rho, Qubit on) {
  Matrix4c out;
  for (int i1 = 0; i1 < 2; ++i1) {
    for (int i2 = 0; i2 < 2; ++i2) {
      for (int j1 = 0; j1 < 2; ++j1) {
        for (int j2 = 0; j2 < 2; ++j2) {
          const int row = 2 * i1 + i2;
          const int col = 2 * j1 + j2;
          out(row, col) = on == Qubit::kFirst ? rho(2 * j1 + i2, 2 * i1 + j2)
                                              : rho(2 * i1 + j2, 2 * j1 + i2);
        }
      }
    }
  }
  return out;
}

PptReport ppt_report(const TwoQubitDensity& rho) {
  const double lowest =
      hermitian_eigenvalues(CMatrix(partial_transpose(rho, Qubit::kSecond)))
          .minCoeff();
  return PptReport{lowest, lowest < -kEntanglementThreshold};
}

double overlap_fidelity(const TwoQubitDensity& rho, Pauli p) {
  const Matrix4c u = on_first_qubit(pauli_matrix(p));
  const Matrix4c rotated = u * rho.matrix() * u.adjoint();
  // tr(A B) for Hermitian A, B is sum_ij A_ij conj(B_ij).
  const double f = (rho.matrix().cwiseProduct(rotated.conjugate())).sum().real();
  return std::clamp(f, 0.0, 1.0);
}

}  // namespace tcqed
