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

// Closed-form coefficient series for the two-atom state, evaluated term by
// term as written, and a comparison against the numeric pipeline.
//
// The series do not reproduce the initial state at tau = 0 and are
// not normalised, so this backend is diagnostic only. Nothing here is used
// to produce sweep results.
//
// Per Fock index n, with gamma = sqrt(n+1), beta = sqrt(n+2),
// mu = 2 (gamma^2 + beta^2), r = sqrt(mu), w = q_n^2:
//
//   t1 = -w (gamma/r) (b beta/r (1 - cos r tau) + i a sin r tau)
//   t2 =  w ((2a/mu)(beta^2+gamma^2) sin^2 r tau + a cos r tau
//            - i (2 beta/r) sin r tau)
//   t3 = -w (sin r tau / r) ((2a/r)(beta^2+gamma^2) + b beta)
//   t4 =  w (cos r tau / r) ((2 b gamma^2/r)(mu - 2 gamma^2) - i a beta)
//
// and c_k = sum_n t_k(n).

#ifndef TCQED_ANALYTIC_HPP_
#define TCQED_ANALYTIC_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "tcqed/hilbert.hpp"
#include "tcqed/linalg.hpp"

namespace tcqed {

/// Per-Fock-index summands t_k(n), k = 1..4 stored at [k-1].
struct CoefficientStreams {
  std::array<std::vector<Complex>, 4> terms;

  std::size_t size() const { return terms[0].size(); }
  /// t_k(n), zero beyond the stored range.
  Complex at(int k, std::size_t n) const {
    const auto& t = terms[static_cast<std::size_t>(k - 1)];
    return n < t.size() ? t[n] : Complex{};
  }
};

struct SeriesCoefficients {
  std::array<Complex, 4> c;
  /// | sum_k |c_k|^2 - 1 |. Recorded, never asserted.
  double norm_defect = 0.0;
};

/// Summands up to and including `cutoff`, with q_n^2 the Poisson weights.
CoefficientStreams coefficient_streams(double mean_photon,
                                       const AtomicInit& init, double tau,
                                       std::size_t cutoff);

SeriesCoefficients series_coefficients(double mean_photon, const AtomicInit& init,
                                     double tau, std::size_t cutoff);
SeriesCoefficients sum_streams(const CoefficientStreams& streams);

struct AnalyticImpurities {
  double eta12 = 0.0;
  double eta1 = 0.0;
  double eta2 = 0.0;
  /// False when any value leaves [0, 1]: evidence of a defect in the
  /// closed-form formulas rather than a numerical problem.
  bool in_range = true;
};

/// The closed-form impurity expressions with their c_n, c_{n+1}, c_{n+2} index
/// shifts, summed over n. Adjacent coefficient groups with no operator
/// between them are read as products.
AnalyticImpurities series_impurities(const CoefficientStreams& streams);

struct DeviationRow {
  double tau = 0.0;
  double eta12_numeric = 0.0;
  double eta12_analytic = 0.0;
  double abs_dev = 0.0;
  double norm_defect = 0.0;
};

struct AnalyticSample {
  double eta12 = 0.0;
  double norm_defect = 0.0;
};

using NumericEta = std::function<double(double tau)>;
using AnalyticEta = std::function<AnalyticSample(double tau)>;

/// One row per tau. Never throws on disagreement; the report is the output.
std::vector<DeviationRow> cross_check(std::span<const double> taus,
                                      const NumericEta& numeric,
                                      const AnalyticEta& analytic);

struct Scenario {
  double mean_photon = 10.0;
  double atomic_a = 0.5;
  double tail_tolerance = kDefaultTailTolerance;
};

/// Numeric pipeline against the closed-form series for one scenario.
std::vector<DeviationRow> cross_check(std::span<const double> taus,
                                      const Scenario& scenario);

/// Header `tau,eta12_numeric,eta12_analytic,abs_dev,norm_defect`.
void write_deviation_csv(std::ostream& out,
                         std::span<const DeviationRow> rows);

}  // namespace tcqed

#endif  // TCQED_ANALYTIC_HPP_
