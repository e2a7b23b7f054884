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

#ifndef TCQED_MEASURES_HPP_
#define TCQED_MEASURES_HPP_

#include <array>

#include "tcqed/linalg.hpp"
#include "tcqed/reduced.hpp"

namespace tcqed {

/// Local operation applied to qubit 1: I, sigma_x, i sigma_y, sigma_z.
/// The global phase of i sigma_y cancels in every conjugation, so sigma_y is
/// used internally.
enum class Pauli : int { kI = 0, kX = 1, kY = 2, kZ = 3 };

inline constexpr std::array<Pauli, 4> kAllPaulis = {Pauli::kI, Pauli::kX,
                                                     Pauli::kY, Pauli::kZ};

Matrix2c pauli_matrix(Pauli p);

/// U (x) I on two qubits.
Matrix4c on_first_qubit(const Matrix2c& u);

inline constexpr double kEntanglementThreshold = 1e-10;

struct ImpurityTriple {
  double eta12 = 0.0;
  double eta1 = 0.0;
  double eta2 = 0.0;
};

struct PptReport {
  double min_eigenvalue = 0.0;
  bool entangled = false;
};

/// 1 - tr(rho^2), evaluated entrywise as 1 - sum |rho_ij|^2.
double impurity(const CMatrix& rho);
double impurity(const TwoQubitDensity& rho);
double impurity(const SingleQubitDensity& rho);

ImpurityTriple impurities(const TwoQubitDensity& rho12);

/// -sum lambda log2 lambda in bits; eigenvalues below 1e-12 contribute 0.
double von_neumann_entropy(const CMatrix& rho);
double von_neumann_entropy(const TwoQubitDensity& rho);

/// Partial transpose on the given qubit. The result is Hermitian but not
/// necessarily a density matrix, hence the raw matrix type.
Matrix4c partial_transpose(const Matrix4c& rho, Qubit on);
inline Matrix4c partial_transpose(const TwoQubitDensity& rho, Qubit on) {
  return partial_transpose(rho.matrix(), on);
}

/// Peres-Horodecki test, exact for two qubits: entangled iff the partial
/// transpose has an eigenvalue below -kEntanglementThreshold.
PptReport ppt_report(const TwoQubitDensity& rho);

/// tr{rho (U (x) I) rho (U (x) I)^dagger}: the trace overlap between rho and
/// its qubit-1 Pauli rotation. This is not the Uhlmann fidelity.
double overlap_fidelity(const TwoQubitDensity& rho, Pauli p);

}  // namespace tcqed

#endif  // TCQED_MEASURES_HPP_
