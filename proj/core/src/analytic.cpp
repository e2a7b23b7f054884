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

#include "tcqed/analytic.hpp"

#include <cmath>
#include <ostream>

#include "tcqed/csv.hpp"
#include "tcqed/dynamics.hpp"
#include "tcqed/measures.hpp"
#include "tcqed/reduced.hpp"

namespace tcqed {
namespace {

double poisson_weight(double mean_photon, std::size_t n) {
  if (mean_photon == 0.0) return n == 0 ? 1.0 : 0.0;
  const double nd = static_cast<double>(n);
  return std::exp(-mean_photon + nd * std::log(mean_photon) -
                  std::lgamma(nd + 1.0));
}

}  // namespace

CoefficientStreams coefficient_streams(double mean_photon,
                                       const AtomicInit& init, double tau,
                                       std::size_t cutoff) {
  const Complex i(0.0, 1.0);
  const Complex a = init.a();
  const Complex b = init.b();
  CoefficientStreams s;
  for (auto& t : s.terms) t.reserve(cutoff + 1);

  for (std::size_t n = 0; n <= cutoff; ++n) {
    const double w = poisson_weight(mean_photon, n);
    const double gamma2 = static_cast<double>(n + 1);
    const double beta2 = static_cast<double>(n + 2);
    const double gamma = std::sqrt(gamma2);
    const double beta = std::sqrt(beta2);
    const double mu = 2.0 * (gamma2 + beta2);
    const double r = std::sqrt(mu);
    const double sn = std::sin(r * tau);
    const double cs = std::cos(r * tau);

    s.terms[0].push_back(-w * (gamma / r) *
                         (b * beta / r * (1.0 - cs) + i * a * sn));
    s.terms[1].push_back(w * ((2.0 * a / mu) * (beta2 + gamma2) * sn * sn +
                              a * cs - i * (2.0 * beta / r) * sn));
    s.terms[2].push_back(-w * (sn / r) *
                         ((2.0 * a / r) * (beta2 + gamma2) + b * beta));
    s.terms[3].push_back(w * (cs / r) *
                         ((2.0 * b * gamma2 / r) * (mu - 2.0 * gamma2) -
                          i * a * beta));
  }
  return s;
}

SeriesCoefficients sum_streams(const CoefficientStreams& streams) {
  SeriesCoefficients out;
  double total = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    Complex c{};
    for (const Complex& t : streams.terms[k]) c += t;
    out.c[k] = c;
    total += std::norm(c);
  }
  out.norm_defect = std::abs(total - 1.0);
  return out;
}

SeriesCoefficients series_coefficients(double mean_photon, const AtomicInit& init,
                                     double tau, std::size_t cutoff) {
  return sum_streams(coefficient_streams(mean_photon, init, tau, cutoff));
}

AnalyticImpurities series_impurities(const CoefficientStreams& streams) {
  // p(k, n) = |c_k(n)|^2 with zero padding past the stored range.
  auto p = [&](int k, std::size_t n) { return std::norm(streams.at(k, n)); };

  double sum12 = 0.0;
  double sum1 = 0.0;
  double sum2 = 0.0;
  for (std::size_t n = 0; n < streams.size(); ++n) {
    const double c1 = p(1, n), c2 = p(2, n), c3 = p(3, n), c4 = p(4, n);
    const double c2n1 = p(2, n + 1), c3n1 = p(3, n + 1), c4n1 = p(4, n + 1);
    const double c4n2 = p(4, n + 2);

    sum12 += c1 * (c1 + 2.0 * (c2n1 + c3n1 + c4n2)) +
             c2 * (c2 + 2.0 * (c3 + c4n1)) + c3 * (c3 + 2.0 * c4n1) + c4 * c4;

    sum1 += (c1 + c3) * (c1 + c3) +
            2.0 * (c2n1 * c1 + (c4n1 * c3) * (c2n1 * c1 * c3 * c4n1) +
                   c4n1 * c3 * c1 * c2n1 + (c2 + c4) * (c2 + c4));

    sum2 += (c1 + c2) * (c1 + c2) +
            2.0 * (c1 * c3n1 + (c2 * c4n1) * (c3n1 * c1 * c2 * c4n1) +
                   c4n1 * c2 * c1 * c3n1 + (c3 + c4) * (c3 + c4));
  }

  AnalyticImpurities out{1.0 - sum12, 1.0 - sum1, 1.0 - sum2, true};
  for (double eta : {out.eta12, out.eta1, out.eta2}) {
    if (!(eta >= 0.0 && eta <= 1.0)) out.in_range = false;
  }
  return out;
}

std::vector<DeviationRow> cross_check(std::span<const double> taus,
                                      const NumericEta& numeric,
                                      const AnalyticEta& analytic) {
  std::vector<DeviationRow> rows;
  rows.reserve(taus.size());
  for (double tau : taus) {
    const double num = numeric(tau);
    const AnalyticSample ana = analytic(tau);
    rows.push_back(
        DeviationRow{tau, num, ana.eta12, std::abs(num - ana.eta12),
                     ana.norm_defect});
  }
  return rows;
}

std::vector<DeviationRow> cross_check(std::span<const double> taus,
                                      const Scenario& scenario) {
  const AtomicInit init = AtomicInit::from_real(scenario.atomic_a);
  const FockAmplitudes field =
      coherent_amplitudes(scenario.mean_photon, scenario.tail_tolerance);
  const JointState psi0 = initial_state(init, field, 2);
  DynamicsConfig config;
  config.tail_tolerance = scenario.tail_tolerance;
  const Propagator propagator(psi0.cutoff(), config);

  const NumericEta numeric = [&](double tau) {
    return impurity(trace_field(propagator.evolve(psi0, tau)));
  };
  const AnalyticEta analytic = [&](double tau) {
    const auto streams =
        coefficient_streams(scenario.mean_photon, init, tau, field.cutoff());
    return AnalyticSample{series_impurities(streams).eta12,
                          sum_streams(streams).norm_defect};
  };
  return cross_check(taus, numeric, analytic);
}

void write_deviation_csv(std::ostream& out,
                         std::span<const DeviationRow> rows) {
  out << "tau,eta12_numeric,eta12_analytic,abs_dev,norm_defect\n";
  for (const auto& r : rows) {
    out << format_number(r.tau) << ',' << format_number(r.eta12_numeric) << ','
        << format_number(r.eta12_analytic) << ',' << format_number(r.abs_dev)
        << ',' << format_number(r.norm_defect) << '\n';
  }
}

}  // namespace tcqed
