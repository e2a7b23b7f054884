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

#include "tcqed/protocol.hpp"

#include <algorithm>
#include <cmath>

#include "tcqed/error.hpp"

namespace tcqed {
namespace {

constexpr double kLogClamp = 1e-15;

std::array<TwoQubitDensity, 4> rotated_states(const TwoQubitDensity& rho) {
  return {pauli_channel(rho, Pauli::kI), pauli_channel(rho, Pauli::kX),
          pauli_channel(rho, Pauli::kY), pauli_channel(rho, Pauli::kZ)};
}

const Probabilities& checked(const Probabilities& p) {
  double sum = 0.0;
  for (double pi : p) {
    if (!(pi >= 0.0)) throw ConfigError("CodingEnsemble: negative probability");
    sum += pi;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw ConfigError("CodingEnsemble: probabilities must sum to 1");
  }
  return p;
}

}  // namespace

TwoQubitDensity pauli_channel(const TwoQubitDensity& rho, Pauli p) {
  const Matrix4c u = on_first_qubit(pauli_matrix(p));
  return TwoQubitDensity(u * rho.matrix() * u.adjoint());
}

CodingEnsemble::CodingEnsemble(const TwoQubitDensity& shared,
                               const Probabilities& p)
    : probabilities_(checked(p)), states_(rotated_states(shared)) {}

TwoQubitDensity coded_state(const CodingEnsemble& ensemble) {
  Matrix4c sum = Matrix4c::Zero();
  for (std::size_t i = 0; i < 4; ++i) {
    sum += ensemble.probabilities()[i] * ensemble.states()[i].matrix();
  }
  return TwoQubitDensity(sum);
}

double holevo_bound(const TwoQubitDensity& rho, const Probabilities& p) {
  const CodingEnsemble ensemble(rho, p);
  double average = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (p[i] > 0.0) {
      average += p[i] * von_neumann_entropy(ensemble.states()[i]);
    }
  }
  return std::max(0.0, von_neumann_entropy(coded_state(ensemble)) - average);
}

double holevo_bound_unitary_form(const TwoQubitDensity& rho,
                                 const Probabilities& p) {
  const CodingEnsemble ensemble(rho, p);
  return std::max(0.0, von_neumann_entropy(coded_state(ensemble)) -
                           von_neumann_entropy(rho));
}

double disturbance(const TwoQubitDensity& rho) {
  double f = 0.0;
  for (Pauli p : kAllPaulis) f += overlap_fidelity(rho, p);
  return std::clamp(1.0 - 0.25 * f, 0.0, 1.0);
}

double attack_disturbance(const TwoQubitDensity& rho, Pauli p) {
  return std::clamp(1.0 - overlap_fidelity(rho, p), 0.0, 1.0);
}

double binary_entropy(double d) {
  const double x = std::clamp(d, kLogClamp, 1.0 - kLogClamp);
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double eve_information(double d) { return 1.0 - binary_entropy(d); }

bool secure(double d) { return -binary_entropy(d) <= -0.5; }

SecurityRecord security_record(const TwoQubitDensity& rho, double d) {
  return SecurityRecord{d, eve_information(d), holevo_bound(rho), secure(d)};
}

}  // namespace tcqed
