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

#include <cmath>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tcqed/error.hpp"
#include "tcqed/hilbert.hpp"

namespace tcqed {
namespace {

TEST_CASE("vacuum coherent state") {
  const auto field = coherent_amplitudes(0.0, 1e-12);
  CHECK(field.cutoff() == 0);
  CHECK(field[0] == 1.0);
}

TEST_CASE("coherent amplitudes respect the tail tolerance") {
  for (double nbar : {1.0, 10.0, 20.0}) {
    CAPTURE(nbar);
    const auto field = coherent_amplitudes(nbar, 1e-12);
    double kept = 0.0;
    for (double q : field.amplitudes()) kept += q * q;
    CHECK(kept <= 1.0 + 1e-15);
    CHECK(kept >= 1.0 - 1e-12);

    // Independent tail: exact pmf summed beyond the cutoff.
    const long double tail = oracle::poisson_tail(nbar, field.cutoff());
    CHECK(tail <= 1e-12L);
    // Minimality: one level fewer would break the tolerance.
    if (field.cutoff() > 0) {
      CHECK(oracle::poisson_tail(nbar, field.cutoff() - 1) > 1e-12L);
    }
  }
}

TEST_CASE("coherent amplitude at the mode matches the Poisson pmf") {
  const auto field = coherent_amplitudes(10.0, 1e-12);
  // e^-10 10^10 / 10!, frozen from an independent 40-digit evaluation.
  constexpr double kFrozen = 0.1251100357211333;
  CHECK(field[10] * field[10] == doctest::Approx(kFrozen).epsilon(1e-13));
  CHECK(static_cast<double>(oracle::poisson_pmf(10.0L, 10)) ==
        doctest::Approx(kFrozen).epsilon(1e-13));
  for (std::size_t n = 0; n <= field.cutoff(); ++n) {
    CAPTURE(n);
    const double ref = std::sqrt(static_cast<double>(oracle::poisson_pmf(10.0L, n)));
    CHECK(field[n] == doctest::Approx(ref).epsilon(1e-12));
  }
}

TEST_CASE("coherent amplitudes are nonnegative with a decreasing tail") {
  for (double nbar : {0.5, 3.0, 20.0, 45.0}) {
    const auto field = coherent_amplitudes(nbar, 1e-12);
    for (std::size_t n = 0; n <= field.cutoff(); ++n) {
      CHECK(field[n] >= 0.0);
      if (static_cast<double>(n) > nbar + 1.0) CHECK(field[n] < field[n - 1]);
    }
  }
}

TEST_CASE("n = 20 keeps 59 levels at 1e-12") {
  const auto field = coherent_amplitudes(20.0, 1e-12);
  CHECK(field.cutoff() == 59);
  CHECK(field.cutoff() > 50);
  CHECK(field.cutoff() < 100);
}

TEST_CASE("coherent amplitudes reject bad input") {
  CHECK_THROWS_AS(coherent_amplitudes(1.0, 0.0), ConfigError);
  CHECK_THROWS_AS(coherent_amplitudes(1.0, -1e-3), ConfigError);
  CHECK_THROWS_AS(coherent_amplitudes(1.0, 1.0), ConfigError);
  CHECK_THROWS_AS(coherent_amplitudes(-1.0, 1e-12), ConfigError);
  CHECK_THROWS_AS(coherent_amplitudes(500.0, 1e-12), ResourceError);
  CHECK_THROWS_AS(coherent_amplitudes(50.0, 1e-12, 40), ResourceError);
}

TEST_CASE("atomic init normalisation") {
  CHECK_NOTHROW(AtomicInit(Complex(0.6, 0.0), Complex(0.0, 0.8)));
  CHECK_THROWS_AS(AtomicInit(1.0, 1.0), ConfigError);
  CHECK_THROWS_AS(AtomicInit::from_real(1.5), ConfigError);
  const auto init = AtomicInit::from_real(0.5);
  CHECK(init.b().real() == doctest::Approx(std::sqrt(0.75)));
}

TEST_CASE("joint index conventions") {
  constexpr std::size_t cutoff = 7;
  CHECK(joint_index(Level::kExcited, Level::kExcited, 0, cutoff) == 0);
  CHECK(joint_index(Level::kGround, Level::kGround, cutoff, cutoff) ==
        4 * (cutoff + 1) - 1);
  CHECK_THROWS_AS(joint_index(Level::kGround, Level::kGround, cutoff + 1, cutoff),
                  ConfigError);
  CHECK_THROWS_AS(joint_unflatten(4 * (cutoff + 1), cutoff), ConfigError);
}

TEST_CASE("joint index is a bijection") {
  for (std::size_t cutoff : {0u, 1u, 5u}) {
    std::set<std::size_t> seen;
    for (Level s1 : {Level::kExcited, Level::kGround}) {
      for (Level s2 : {Level::kExcited, Level::kGround}) {
        for (std::size_t n = 0; n <= cutoff; ++n) {
          const BasisState s{s1, s2, n};
          const auto idx = joint_index(s, cutoff);
          CHECK(idx < joint_dimension(cutoff));
          CHECK(joint_unflatten(idx, cutoff) == s);
          seen.insert(idx);
        }
      }
    }
    CHECK(seen.size() == joint_dimension(cutoff));
  }
}

TEST_CASE("initial state for a = 1 in vacuum is |e e 0>") {
  const auto psi =
      initial_state(AtomicInit(1.0, 0.0), coherent_amplitudes(0.0, 1e-12));
  CHECK(psi.cutoff() == 0);
  CHECK(std::abs(psi.amplitudes()(0) - Complex(1.0)) < 1e-15);
  CHECK(psi.amplitudes().tail(3).norm() == 0.0);
}

TEST_CASE("initial state amplitudes and support") {
  const auto field = coherent_amplitudes(4.0, 1e-12);
  const auto init = AtomicInit::from_real(0.5);
  const auto psi = initial_state(init, field);
  CHECK(std::abs(psi.amplitudes().norm() - 1.0) < 1e-12);

  std::size_t nonzero = 0;
  for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i) {
    if (psi.amplitudes()(i) != Complex{}) ++nonzero;
  }
  CHECK(nonzero == 2 * (field.cutoff() + 1));

  for (std::size_t n = 0; n <= field.cutoff(); ++n) {
    CHECK(std::abs(psi.amplitude(Level::kExcited, Level::kGround, n) -
                   std::sqrt(0.75) * field[n]) < 1e-12);
    CHECK(std::abs(psi.amplitude(Level::kExcited, Level::kExcited, n) -
                   0.5 * field[n]) < 1e-12);
    CHECK(psi.amplitude(Level::kGround, Level::kExcited, n) == Complex{});
  }
}

TEST_CASE("initial state headroom leaves the extra levels empty") {
  const auto field = coherent_amplitudes(2.0, 1e-12);
  const auto psi = initial_state(AtomicInit::from_real(0.5), field, 2);
  CHECK(psi.cutoff() == field.cutoff() + 2);
  for (std::size_t n = field.cutoff() + 1; n <= psi.cutoff(); ++n) {
    CHECK(psi.amplitude(Level::kExcited, Level::kExcited, n) == Complex{});
  }
}

TEST_CASE("joint state rejects bad vectors") {
  CHECK_THROWS_AS(JointState(1, CVector::Zero(8)), NumericalError);
  CVector v = CVector::Zero(4);
  v(0) = 1.0;
  CHECK_THROWS_AS(JointState(1, v), NumericalError);
}

}  // namespace
}  // namespace tcqed
