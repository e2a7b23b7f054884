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

#include "tcqed/dynamics.hpp"

#include <cmath>
#include <string>

#include "tcqed/error.hpp"

namespace tcqed {
namespace {

// <x| (a^dagger sigma_-^(i) + sigma_+^(i) a) |y> summed over both atoms.
double interaction_element(const BasisState& x, const BasisState& y) {
  auto lowered = [](const BasisState& hi, const BasisState& lo) {
    // hi has the atom excited and one photon fewer than lo.
    if (hi.photons + 1 != lo.photons) return 0.0;
    double value = 0.0;
    if (hi.atom2 == lo.atom2 && hi.atom1 == Level::kExcited &&
        lo.atom1 == Level::kGround) {
      value += std::sqrt(static_cast<double>(lo.photons));
    }
    if (hi.atom1 == lo.atom1 && hi.atom2 == Level::kExcited &&
        lo.atom2 == Level::kGround) {
      value += std::sqrt(static_cast<double>(lo.photons));
    }
    return value;
  };
  return lowered(x, y) + lowered(y, x);
}

std::size_t excited_count(const BasisState& s) {
  return (s.atom1 == Level::kExcited ? 1 : 0) +
         (s.atom2 == Level::kExcited ? 1 : 0);
}

}  // namespace

void DynamicsConfig::validate() const {
  if (!(coupling > 0.0) || !std::isfinite(coupling)) {
    throw ConfigError("DynamicsConfig: coupling must be positive");
  }
  if (!(tail_tolerance > 0.0 && tail_tolerance < 1.0)) {
    throw ConfigError("DynamicsConfig: tail tolerance must be in (0, 1)");
  }
  if (!(leak_limit >= 0.0)) {
    throw ConfigError("DynamicsConfig: leak limit must be >= 0");
  }
}

std::vector<BasisState> excitation_basis(std::size_t excitation,
                                         std::size_t cutoff) {
  if (excitation > cutoff + 2) {
    throw ConfigError("excitation_basis: E = " + std::to_string(excitation) +
                      " exceeds cutoff + 2");
  }
  const BasisState candidates[] = {
      {Level::kExcited, Level::kExcited, 0},
      {Level::kExcited, Level::kGround, 0},
      {Level::kGround, Level::kExcited, 0},
      {Level::kGround, Level::kGround, 0},
  };
  std::vector<BasisState> basis;
  for (BasisState s : candidates) {
    const std::size_t atoms = excited_count(s);
    if (atoms > excitation) continue;
    s.photons = excitation - atoms;
    if (s.photons <= cutoff) basis.push_back(s);
  }
  return basis;
}

ExcitationBlock block_hamiltonian(std::size_t excitation,
                                  const DynamicsConfig& config,
                                  std::size_t cutoff) {
  ExcitationBlock block;
  block.excitation = excitation;
  block.basis = excitation_basis(excitation, cutoff);
  // Full manifold: one state for E = 0, three for E = 1, four otherwise.
  const std::size_t full = excitation == 0 ? 1 : (excitation == 1 ? 3 : 4);
  block.truncated = block.basis.size() < full;

  const auto dim = static_cast<Eigen::Index>(block.basis.size());
  block.matrix = CMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      block.matrix(i, j) =
          config.coupling *
          interaction_element(block.basis[static_cast<std::size_t>(i)],
                              block.basis[static_cast<std::size_t>(j)]);
    }
  }
  return block;
}

Propagator::Propagator(std::size_t cutoff, const DynamicsConfig& config)
    : cutoff_(cutoff), config_(config) {
  config_.validate();
  blocks_.reserve(cutoff + 3);
  for (std::size_t e = 0; e <= cutoff + 2; ++e) {
    CachedBlock cached;
    cached.block = block_hamiltonian(e, config_, cutoff);
    for (const auto& s : cached.block.basis) {
      cached.indices.push_back(
          static_cast<Eigen::Index>(joint_index(s, cutoff)));
    }
    auto eig = jacobi_eigen(cached.block.matrix);
    cached.energies = eig.values / config_.coupling;
    cached.vectors = std::move(eig.vectors);
    blocks_.push_back(std::move(cached));
  }
}

void Propagator::check_state(const JointState& state) const {
  if (state.cutoff() != cutoff_) {
    throw ConfigError("Propagator: state cutoff " +
                      std::to_string(state.cutoff()) +
                      " does not match propagator cutoff " +
                      std::to_string(cutoff_));
  }
}

std::vector<double> Propagator::manifold_populations(
    const JointState& state) const {
  check_state(state);
  std::vector<double> pops;
  pops.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    double p = 0.0;
    for (auto idx : b.indices) p += std::norm(state.amplitudes()(idx));
    pops.push_back(p);
  }
  return pops;
}

double Propagator::truncation_leak(const JointState& state) const {
  const auto pops = manifold_populations(state);
  double leak = 0.0;
  for (std::size_t e = 0; e < blocks_.size(); ++e) {
    if (blocks_[e].block.truncated) leak += pops[e];
  }
  return leak;
}

JointState Propagator::evolve(const JointState& state, double tau) const {
  check_state(state);
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw ConfigError("evolve: tau must be finite and >= 0");
  }
  const double leak = truncation_leak(state);
  if (leak > config_.leak_limit) {
    throw ResourceError("evolve: population " + std::to_string(leak) +
                        " in cutoff-truncated blocks exceeds leak limit");
  }

  const CVector& in = state.amplitudes();
  CVector out = CVector::Zero(in.size());
  for (const auto& b : blocks_) {
    const auto dim = static_cast<Eigen::Index>(b.indices.size());
    CVector x(dim);
    for (Eigen::Index k = 0; k < dim; ++k) x(k) = in(b.indices[k]);
    CVector y = b.vectors.adjoint() * x;
    for (Eigen::Index k = 0; k < dim; ++k) {
      y(k) *= std::polar(1.0, -b.energies(k) * tau);
    }
    x = b.vectors * y;
    for (Eigen::Index k = 0; k < dim; ++k) out(b.indices[k]) = x(k);
  }
  return JointState(cutoff_, std::move(out));
}

JointState evolve(const JointState& state, double tau,
                  const DynamicsConfig& config) {
  return Propagator(state.cutoff(), config).evolve(state, tau);
}

}  // namespace tcqed
