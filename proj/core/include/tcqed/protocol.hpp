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

// Pauli attacks on the travelling qubit, dense coding over the shared pair,
// and the individual-attack security test.
//
// Note the orientation of the security test: a channel counts as secure when
// the binary entropy of the disturbance is at least 1/2, i.e. for
// D in [D*, 1 - D*] with D* ~= 0.110028. Large disturbance is "secure" here,
// which is the opposite of the usual QKD reading.

#ifndef TCQED_PROTOCOL_HPP_
#define TCQED_PROTOCOL_HPP_

#include <array>

#include "tcqed/measures.hpp"
#include "tcqed/reduced.hpp"

namespace tcqed {

using Probabilities = std::array<double, 4>;

inline constexpr Probabilities kUniformProbabilities = {0.25, 0.25, 0.25,
                                                        0.25};

/// (U_i (x) I) rho (U_i (x) I)^dagger.
TwoQubitDensity pauli_channel(const TwoQubitDensity& rho, Pauli p);

class CodingEnsemble {
 public:
  /// Throws ConfigError unless the probabilities are >= 0 and sum to 1
  /// within 1e-12.
  CodingEnsemble(const TwoQubitDensity& shared, const Probabilities& p);

  const Probabilities& probabilities() const { return probabilities_; }
  const std::array<TwoQubitDensity, 4>& states() const { return states_; }

 private:
  Probabilities probabilities_;
  std::array<TwoQubitDensity, 4> states_;
};

TwoQubitDensity coded_state(const CodingEnsemble& ensemble);

/// S(sum p_i rho_i) - sum p_i S(rho_i), in bits.
double holevo_bound(const TwoQubitDensity& rho,
                    const Probabilities& p = kUniformProbabilities);

/// S(rho_cod) - S(rho). Equal to holevo_bound because every rho_i is
/// unitarily equivalent to rho.
double holevo_bound_unitary_form(const TwoQubitDensity& rho,
                                 const Probabilities& p = kUniformProbabilities);

/// D = 1 - (1/4) sum_i overlap_fidelity(rho, U_i), clamped to [0, 1].
double disturbance(const TwoQubitDensity& rho);

/// D = 1 - overlap_fidelity(rho, U_p): Bob's error when Eve always applies
/// the single Pauli p.
double attack_disturbance(const TwoQubitDensity& rho, Pauli p);

/// h(D) = -D log2 D - (1 - D) log2 (1 - D), with D clamped to
/// [1e-15, 1 - 1e-15] inside the logarithms.
double binary_entropy(double d);

/// I_AE = 1 + (1 - D) log2 (1 - D) + D log2 D = 1 - h(D).
double eve_information(double d);

/// (1 - D) log2 (1 - D) + D log2 D <= -1/2.
bool secure(double d);

struct SecurityRecord {
  double disturbance = 0.0;
  double eve_info = 0.0;
  double bob_info = 0.0;
  bool secure = false;
};

/// Security figures for a shared pair with uniform coding. `disturbance` is
/// supplied by the caller so the attack model stays explicit.
SecurityRecord security_record(const TwoQubitDensity& rho, double disturbance);

}  // namespace tcqed

#endif  // TCQED_PROTOCOL_HPP_
