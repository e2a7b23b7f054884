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

// Reduced atomic states.
//
// Two-qubit matrices are stored in the row-major basis |00>, |01>, |10>, |11>
// (qubit 1 is the high bit), with |0> == |e>. The display ordering
// |00>, |10>, |01>, |11> swaps indices 1 and 2; see to_display_order().

#ifndef TCQED_REDUCED_HPP_
#define TCQED_REDUCED_HPP_

#include <Eigen/Dense>

#include "tcqed/hilbert.hpp"
#include "tcqed/linalg.hpp"

namespace tcqed {

using Matrix4c = Eigen::Matrix4cd;
using Matrix2c = Eigen::Matrix2cd;

inline constexpr double kDensityTolerance = 1e-12;
/// Eigenvalues in [-kPsdClip, 0) are treated as rounding and clipped to zero.
inline constexpr double kPsdClip = 1e-10;

/// Validated 4x4 density matrix of the atom pair.
class TwoQubitDensity {
 public:
  /// Checks Hermiticity and unit trace (1e-12). A spectrum dipping below
  /// zero by at most kPsdClip is repaired by clipping and renormalising;
  /// anything more negative throws NumericalError.
  explicit TwoQubitDensity(const Matrix4c& matrix);

  const Matrix4c& matrix() const { return matrix_; }

  /// Product state rho_1 (x) rho_2, with qubit 1 as the high bit.
  static TwoQubitDensity product(const Matrix2c& first, const Matrix2c& second);
  static TwoQubitDensity pure(const Eigen::Vector4cd& ket);

 private:
  Matrix4c matrix_;
};

class SingleQubitDensity {
 public:
  explicit SingleQubitDensity(const Matrix2c& matrix);
  const Matrix2c& matrix() const { return matrix_; }

 private:
  Matrix2c matrix_;
};

enum class Qubit : int { kFirst = 1, kSecond = 2 };

/// rho_12 = tr_field |psi><psi|.
TwoQubitDensity trace_field(const JointState& state);

/// Reduction to the single qubit `keep` by tracing out the other one.
SingleQubitDensity trace_atom(const TwoQubitDensity& rho, Qubit keep);

/// tr(rho_field^2), from the Schmidt coefficients of the atom-pair | field
/// bipartition (singular values of the 4 x (cutoff+1) amplitude matrix).
double field_purity(const JointState& state);

/// Purity of the (atom 2, field) complement of atom 1, from the Schmidt
/// coefficients of the atom-1 | rest bipartition.
double atom1_complement_purity(const JointState& state);

/// Permutes |00>,|01>,|10>,|11> storage into |00>,|10>,|01>,|11> order.
Matrix4c to_display_order(const Matrix4c& stored);

}  // namespace tcqed

#endif  // TCQED_REDUCED_HPP_
