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

// Truncated Hilbert space of two two-level atoms and one cavity mode.
//
// Joint basis states are (s1, s2, n) with s1, s2 in {e, g} and n the Fock
// index. The flat ordering puts the field index fastest:
//
//   index = (2 * s1 + s2) * (cutoff + 1) + n,   e = 0, g = 1
//
// so (e, e, 0) is index 0 and (g, g, cutoff) is the last element. The qubit
// convention used throughout is |0> == |e>, |1> == |g>.

#ifndef TCQED_HILBERT_HPP_
#define TCQED_HILBERT_HPP_

#include <cstddef>
#include <vector>

#include "tcqed/linalg.hpp"

namespace tcqed {

enum class Level : int { kExcited = 0, kGround = 1 };

inline constexpr double kDefaultTailTolerance = 1e-12;
inline constexpr std::size_t kDefaultMaxCutoff = 256;

/// Real, nonnegative coherent-state amplitudes q_n truncated at `cutoff`.
class FockAmplitudes {
 public:
  double mean_photon() const { return mean_photon_; }
  std::size_t cutoff() const { return amplitudes_.size() - 1; }
  double tail_tolerance() const { return tail_tolerance_; }
  const std::vector<double>& amplitudes() const { return amplitudes_; }
  double operator[](std::size_t n) const { return amplitudes_[n]; }

  /// 1 - sum q_n^2 over the retained levels.
  double discarded_probability() const;

 private:
  friend FockAmplitudes coherent_amplitudes(double, double, std::size_t);
  FockAmplitudes(double mean_photon, double tail_tolerance,
                 std::vector<double> amplitudes)
      : mean_photon_(mean_photon),
        tail_tolerance_(tail_tolerance),
        amplitudes_(std::move(amplitudes)) {}

  double mean_photon_;
  double tail_tolerance_;
  std::vector<double> amplitudes_;
};

/// Coherent-state amplitudes q_n = exp(-nbar/2) nbar^(n/2) / sqrt(n!),
/// evaluated in the log domain. The cutoff is the smallest n_max whose
/// discarded Poisson tail is <= tail_tolerance.
///
/// Throws ConfigError for nbar < 0 or tail_tolerance outside (0, 1), and
/// ResourceError if the cutoff would exceed `max_cutoff`.
FockAmplitudes coherent_amplitudes(double mean_photon,
                                   double tail_tolerance = kDefaultTailTolerance,
                                   std::size_t max_cutoff = kDefaultMaxCutoff);

/// Initial amplitudes of the two atoms: atom 1 excited, atom 2 in a|e> + b|g>.
class AtomicInit {
 public:
  /// Throws ConfigError unless |a|^2 + |b|^2 = 1 within 1e-12.
  AtomicInit(Complex a, Complex b);

  /// Real a in [0, 1] with b = sqrt(1 - a^2).
  static AtomicInit from_real(double a);

  Complex a() const { return a_; }
  Complex b() const { return b_; }

 private:
  Complex a_;
  Complex b_;
};

struct BasisState {
  Level atom1;
  Level atom2;
  std::size_t photons;

  friend bool operator==(const BasisState&, const BasisState&) = default;
};

std::size_t joint_dimension(std::size_t cutoff);

/// Flat index of (s1, s2, n). Throws ConfigError if n > cutoff.
std::size_t joint_index(Level atom1, Level atom2, std::size_t photons,
                        std::size_t cutoff);
inline std::size_t joint_index(const BasisState& s, std::size_t cutoff) {
  return joint_index(s.atom1, s.atom2, s.photons, cutoff);
}

/// Inverse of joint_index. Throws ConfigError if index is out of range.
BasisState joint_unflatten(std::size_t index, std::size_t cutoff);

/// Normalised pure state of atoms and field.
class JointState {
 public:
  /// Throws NumericalError if the vector length does not match the cutoff or
  /// the norm deviates from 1 by more than 1e-10.
  JointState(std::size_t cutoff, CVector amplitudes);

  std::size_t cutoff() const { return cutoff_; }
  const CVector& amplitudes() const { return amplitudes_; }
  Complex amplitude(Level atom1, Level atom2, std::size_t photons) const {
    return amplitudes_(static_cast<Eigen::Index>(
        joint_index(atom1, atom2, photons, cutoff_)));
  }

 private:
  std::size_t cutoff_;
  CVector amplitudes_;
};

/// |psi_0> = sum_n q_n |n> (a|e e> + b|e g>), renormalised exactly.
///
/// The joint space is allocated with `cutoff = field.cutoff() + headroom`;
/// the extra levels start empty. Two levels of headroom make every
/// excitation manifold touched by the initial state complete, so the
/// evolution has no truncation leak.
JointState initial_state(const AtomicInit& init, const FockAmplitudes& field,
                         std::size_t headroom = 0);

}  // namespace tcqed

#endif  // TCQED_HILBERT_HPP_
