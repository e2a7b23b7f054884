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

// Resonant two-atom / one-mode interaction in the interaction picture,
//
//   H_int = lambda * sum_i (a^dagger sigma_-^(i) + sigma_+^(i) a),
//
// which conserves E = n + [s1 = e] + [s2 = e]. The joint space splits into
// excitation blocks of dimension <= 4 that are diagonalised once; evolution
// to any scaled time tau = lambda t only rebuilds the phases.

#ifndef TCQED_DYNAMICS_HPP_
#define TCQED_DYNAMICS_HPP_

#include <cstddef>
#include <vector>

#include "tcqed/hilbert.hpp"
#include "tcqed/linalg.hpp"

namespace tcqed {

struct DynamicsConfig {
  /// lambda. Only sets the unit of energy; evolution is in tau = lambda t.
  double coupling = 1.0;
  /// omega. Drops out at resonance in the interaction picture.
  double field_frequency = 1.0;
  double tail_tolerance = kDefaultTailTolerance;
  /// Largest population allowed in blocks clipped by the cutoff.
  double leak_limit = 1e-8;

  /// Throws ConfigError if coupling <= 0 or a tolerance is out of range.
  void validate() const;
};

struct ExcitationBlock {
  std::size_t excitation = 0;
  std::vector<BasisState> basis;
  /// Block of H_int in the `basis` order, in units where lambda = coupling.
  CMatrix matrix;
  /// True when some state of this manifold lies beyond the cutoff.
  bool truncated = false;
};

/// Basis of the E-excitation manifold in the order
/// (e,e,E-2), (e,g,E-1), (g,e,E-1), (g,g,E), dropping entries with a
/// negative or over-cutoff Fock index. Requires E <= cutoff + 2.
std::vector<BasisState> excitation_basis(std::size_t excitation,
                                         std::size_t cutoff);

ExcitationBlock block_hamiltonian(std::size_t excitation,
                                  const DynamicsConfig& config,
                                  std::size_t cutoff);

/// Cached block eigendecompositions for one cutoff. Read-only after
/// construction, so evolve() may be called concurrently.
class Propagator {
 public:
  Propagator(std::size_t cutoff, const DynamicsConfig& config);

  std::size_t cutoff() const { return cutoff_; }
  const DynamicsConfig& config() const { return config_; }
  std::size_t block_count() const { return blocks_.size(); }
  const ExcitationBlock& block(std::size_t excitation) const {
    return blocks_[excitation].block;
  }

  /// exp(-i H_int t) |state> with tau = lambda t. Throws ResourceError if
  /// the state leaks more than leak_limit into truncated blocks, and
  /// ConfigError for tau < 0 or a cutoff mismatch.
  JointState evolve(const JointState& state, double tau) const;

  /// Population in each excitation manifold, indexed by E.
  std::vector<double> manifold_populations(const JointState& state) const;

  /// Population carried by blocks clipped by the cutoff.
  double truncation_leak(const JointState& state) const;

 private:
  struct CachedBlock {
    ExcitationBlock block;
    std::vector<Eigen::Index> indices;
    RVector energies;  // eigenvalues / lambda
    CMatrix vectors;
  };

  void check_state(const JointState& state) const;

  std::size_t cutoff_;
  DynamicsConfig config_;
  std::vector<CachedBlock> blocks_;
};

/// One-shot evolution; builds a Propagator for the state's cutoff.
JointState evolve(const JointState& state, double tau,
                  const DynamicsConfig& config);

}  // namespace tcqed

#endif  // TCQED_DYNAMICS_HPP_
