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

#include "tcqed/reduced.hpp"

#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "tcqed/error.hpp"

namespace tcqed {
namespace {

template <typename M>
M validated_density(const M& raw, const char* who) {
  if (hermiticity_defect(raw) > kDensityTolerance) {
    throw NumericalError(std::string(who) + ": matrix is not Hermitian");
  }
  if (std::abs(raw.trace().real() - 1.0) > kDensityTolerance) {
    throw NumericalError(std::string(who) + ": trace is not 1");
  }
  M herm = 0.5 * (raw + raw.adjoint());
  auto eig = jacobi_eigen(herm);
  const double lowest = eig.values.minCoeff();
  if (lowest >= 0.0) return herm;
  if (lowest < -kPsdClip) {
    throw NumericalError(std::string(who) + ": negative eigenvalue " +
                         std::to_string(lowest));
  }
  RVector clipped = eig.values.cwiseMax(0.0);
  clipped /= clipped.sum();
  return eig.vectors * clipped.asDiagonal() * eig.vectors.adjoint();
}

// Amplitudes reshaped as (rows = pair index of the first `split` qubits,
// cols = everything else), where the flat order is (s1, s2, n).
CMatrix bipartition(const JointState& state, Eigen::Index rows) {
  const auto& psi = state.amplitudes();
  const Eigen::Index cols = psi.size() / rows;
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    m.row(r) = psi.segment(r * cols, cols).transpose();
  }
  return m;
}

double schmidt_purity(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& s = svd.singularValues();
  return s.array().square().square().sum();
}

}  // namespace

TwoQubitDensity::TwoQubitDensity(const Matrix4c& matrix)
    : matrix_(validated_density(CMatrix(matrix), "TwoQubitDensity")) {}

TwoQubitDensity TwoQubitDensity::product(const Matrix2c& first,
                                         const Matrix2c& second) {
  Matrix4c m;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      m.block<2, 2>(2 * i, 2 * j) = first(i, j) * second;
    }
  }
  return TwoQubitDensity(m);
}

TwoQubitDensity TwoQubitDensity::pure(const Eigen::Vector4cd& ket) {
  const Eigen::Vector4cd v = ket / ket.norm();
  return TwoQubitDensity(v * v.adjoint());
}

SingleQubitDensity::SingleQubitDensity(const Matrix2c& matrix)
    : matrix_(validated_density(CMatrix(matrix), "SingleQubitDensity")) {}

TwoQubitDensity trace_field(const JointState& state) {
  // Rows are the atom-pair index 2*s1 + s2, which is exactly the stored
  // two-qubit index under |0> == |e>.
  const CMatrix m = bipartition(state, 4);
  return TwoQubitDensity(Matrix4c(m * m.adjoint()));
}

SingleQubitDensity trace_atom(const TwoQubitDensity& rho, Qubit keep) {
  const Matrix4c& r = rho.matrix();
  Matrix2c out = Matrix2c::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        out(i, j) += keep == Qubit::kFirst ? r(2 * i + k, 2 * j + k)
                                           : r(2 * k + i, 2 * k + j);
      }
    }
  }
  return SingleQubitDensity(out);
}

double field_purity(const JointState& state) {
  return schmidt_purity(bipartition(state, 4));
}

double atom1_complement_purity(const JointState& state) {
  return schmidt_purity(bipartition(state, 2));
}

Matrix4c to_display_order(const Matrix4c& stored) {
  Eigen::PermutationMatrix<4> perm;
  perm.indices() << 0, 2, 1, 3;
  return perm * stored * perm.transpose();
}

}  // namespace tcqed
