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

#include "tcqed/hilbert.hpp"

#include <cmath>
#include <string>

#include "tcqed/error.hpp"

namespace tcqed {

double FockAmplitudes::discarded_probability() const {
  long double kept = 0.0L;
  for (double q : amplitudes_) kept += static_cast<long double>(q) * q;
  return static_cast<double>(1.0L - kept);
}

FockAmplitudes coherent_amplitudes(double mean_photon, double tail_tolerance,
                                   std::size_t max_cutoff) {
  if (!(mean_photon >= 0.0) || !std::isfinite(mean_photon)) {
    throw ConfigError("coherent_amplitudes: mean photon number must be >= 0");
  }
  if (!(tail_tolerance > 0.0 && tail_tolerance < 1.0)) {
    throw ConfigError("coherent_amplitudes: tail tolerance must be in (0, 1)");
  }

  std::vector<double> q;
  if (mean_photon == 0.0) {
    q.push_back(1.0);
    return FockAmplitudes(mean_photon, tail_tolerance, std::move(q));
  }

  const double log_nbar = std::log(mean_photon);
  long double kept = 0.0L;
  for (std::size_t n = 0;; ++n) {
    if (n > max_cutoff) {
      throw ResourceError("coherent_amplitudes: nbar = " +
                          std::to_string(mean_photon) +
                          " needs more than " + std::to_string(max_cutoff) +
                          " Fock levels");
    }
    const double nd = static_cast<double>(n);
    const double log_q =
        -0.5 * mean_photon + 0.5 * nd * log_nbar - 0.5 * std::lgamma(nd + 1.0);
    const double qn = std::exp(log_q);
    q.push_back(qn);
    kept += static_cast<long double>(qn) * qn;
    if (1.0L - kept <= tail_tolerance) break;
  }
  return FockAmplitudes(mean_photon, tail_tolerance, std::move(q));
}

AtomicInit::AtomicInit(Complex a, Complex b) : a_(a), b_(b) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12) {
    throw ConfigError("AtomicInit: |a|^2 + |b|^2 must equal 1");
  }
}

AtomicInit AtomicInit::from_real(double a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw ConfigError("AtomicInit: a must lie in [0, 1]");
  }
  return AtomicInit(a, std::sqrt(1.0 - a * a));
}

std::size_t joint_dimension(std::size_t cutoff) { return 4 * (cutoff + 1); }

std::size_t joint_index(Level atom1, Level atom2, std::size_t photons,
                        std::size_t cutoff) {
  if (photons > cutoff) {
    throw ConfigError("joint_index: Fock index " + std::to_string(photons) +
                      " exceeds cutoff " + std::to_string(cutoff));
  }
  const auto pair = 2 * static_cast<std::size_t>(atom1) +
                    static_cast<std::size_t>(atom2);
  return pair * (cutoff + 1) + photons;
}

BasisState joint_unflatten(std::size_t index, std::size_t cutoff) {
  if (index >= joint_dimension(cutoff)) {
    throw ConfigError("joint_unflatten: index out of range");
  }
  const std::size_t pair = index / (cutoff + 1);
  return BasisState{static_cast<Level>(pair / 2), static_cast<Level>(pair % 2),
                    index % (cutoff + 1)};
}

JointState::JointState(std::size_t cutoff, CVector amplitudes)
    : cutoff_(cutoff), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != joint_dimension(cutoff_)) {
    throw NumericalError("JointState: amplitude vector has wrong length");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-10) {
    throw NumericalError("JointState: state is not normalised");
  }
}

JointState initial_state(const AtomicInit& init, const FockAmplitudes& field,
                         std::size_t headroom) {
  const std::size_t cutoff = field.cutoff() + headroom;
  CVector psi = CVector::Zero(static_cast<Eigen::Index>(joint_dimension(cutoff)));
  for (std::size_t n = 0; n <= field.cutoff(); ++n) {
    const auto ee = joint_index(Level::kExcited, Level::kExcited, n, cutoff);
    const auto eg = joint_index(Level::kExcited, Level::kGround, n, cutoff);
    psi(static_cast<Eigen::Index>(ee)) = init.a() * field[n];
    psi(static_cast<Eigen::Index>(eg)) = init.b() * field[n];
  }
  const double norm = psi.norm();
  if (std::abs(norm * norm - 1.0) > 2.0 * field.tail_tolerance() + 1e-14) {
    throw NumericalError("initial_state: field truncation exceeds tolerance");
  }
  psi /= norm;
  return JointState(cutoff, std::move(psi));
}

}  // namespace tcqed
