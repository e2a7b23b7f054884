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
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "tcqed/csv.hpp"
#include "tcqed/error.hpp"
#include "tcqed/sweep.hpp"

namespace tcqed {
namespace {

std::string to_csv(const SweepConfig& config) {
  const auto records = run_sweep(config);
  std::ostringstream out;
  emit_csv(out, records, config);
  return out.str();
}

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

SweepConfig short_config() {
  SweepConfig c;
  c.mean_photon = 4.0;
  c.tau_end = 2.0;
  c.tau_step = 0.1;
  return c;
}

TEST_CASE("tau grid is built by index") {
  SweepConfig c;
  c.tau_start = 0.0;
  c.tau_end = 50.0;
  c.tau_step = 0.05;
  const auto taus = tau_grid(c);
  CHECK(taus.size() == 1001);
  CHECK(taus[1000] == 1000 * 0.05);
  CHECK(taus[333] == 333 * 0.05);

  c.tau_start = 1.0;
  c.tau_end = 1.95;
  c.tau_step = 0.1;
  CHECK(tau_grid(c).size() == 10);
  c.tau_end = c.tau_start;
  CHECK(tau_grid(c).size() == 1);
}

TEST_CASE("fig1 parameters give 1001 records starting pure") {
  SweepConfig c;
  c.mean_photon = 10.0;
  c.atomic_a = 0.5;
  const auto records = run_sweep(c);
  REQUIRE(records.size() == 1001);
  CHECK(records[0].eta.eta12 < 1e-10);
  for (std::size_t k = 0; k < records.size(); ++k) {
    CHECK(records[k].tau == static_cast<double>(k) * 0.05);
  }
}

TEST_CASE("empty output list leaves only tau") {
  SweepConfig c = short_config();
  c.outputs.clear();
  const std::string csv = to_csv(c);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "tau");
  std::getline(in, line);
  CHECK(line == "0");
  std::getline(in, line);
  CHECK(line == "0.1");
}

TEST_CASE("csv is byte-identical across runs and thread counts") {
  SweepConfig c = short_config();
  c.attack = Attack::kAll;
  c.threads = 1;
  const std::string serial = to_csv(c);
  c.threads = 4;
  const std::string parallel = to_csv(c);
  CHECK(serial == parallel);
  CHECK(to_csv(c) == parallel);
}

TEST_CASE("one record gives header plus one row") {
  SweepConfig c = short_config();
  c.tau_end = 0.0;
  CHECK(line_count(to_csv(c)) == 2);
  CHECK_THROWS_AS(emit_csv(std::cout, {}, c), ConfigError);
}

TEST_CASE("full header order") {
  SweepConfig c;
  c.attack = Attack::kAll;
  c.outputs = {OutputGroup::kSecurity, OutputGroup::kPurity, OutputGroup::kPpt,
               OutputGroup::kCoding, OutputGroup::kFidelity};
  const auto cols = csv_columns(c);
  const std::vector<std::string> expected = {
      "tau",          "eta12",        "eta1",         "eta2",
      "ppt_min_none", "ppt_min_x",    "ppt_min_y",    "ppt_min_z",
      "entangled_none", "entangled_x", "entangled_y", "entangled_z",
      "F0",           "F1",           "F2",           "F3",
      "I_bob",        "D",            "I_ae",         "secure"};
  CHECK(cols == expected);

  c.attack = Attack::kZ;
  c.outputs = {OutputGroup::kPpt};
  CHECK(csv_columns(c) == std::vector<std::string>{"tau", "ppt_min_none",
                                                   "ppt_min_z", "entangled_none",
                                                   "entangled_z"});
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1234567.891011121) == "1234567.89101");
  CHECK(format_number(2.5e-20) == "2.5e-20");
}

TEST_CASE("records are consistent with thresholds") {
  SweepConfig c = short_config();
  c.attack = Attack::kAll;
  for (const auto& r : run_sweep(c)) {
    for (const auto& p : r.ppt) {
      CHECK(p.entangled == (p.min_eigenvalue < -kEntanglementThreshold));
    }
    CHECK(r.secure == (r.eve_info <= 0.5));
    CHECK(std::isfinite(r.bob_info));
    CHECK(r.bob_info >= 0.0);
    CHECK(r.bob_info <= 2.0);
    CHECK(r.eta.eta12 <= 0.75 + 1e-9);
    CHECK(r.eta.eta1 <= 0.5 + 1e-9);
  }
}

TEST_CASE("single-Pauli attacks use that rotation's infidelity") {
  SweepConfig c = short_config();
  c.attack = Attack::kZ;
  for (const auto& r : run_sweep(c)) {
    CHECK(r.disturbance == doctest::Approx(1.0 - r.fidelity[3]));
  }
  c.attack = Attack::kNone;
  for (const auto& r : run_sweep(c)) {
    const double avg =
        0.25 * (r.fidelity[0] + r.fidelity[1] + r.fidelity[2] + r.fidelity[3]);
    CHECK(r.disturbance == doctest::Approx(1.0 - avg));
  }
}

TEST_CASE("figure presets") {
  const auto fig1 = figure_preset("fig1");
  CHECK(fig1.mean_photon == 10.0);
  CHECK(fig1.atomic_a == 0.5);
  CHECK(fig1.wants(OutputGroup::kPurity));

  CHECK(figure_preset("fig2").mean_photon == 20.0);
  CHECK(figure_preset("fig3").atomic_a == 1.0);
  CHECK(figure_preset("fig4a").attack == Attack::kX);
  CHECK(figure_preset("fig4b").attack == Attack::kZ);
  CHECK(figure_preset("fig5a").wants(OutputGroup::kFidelity));
  CHECK(figure_preset("fig6").wants(OutputGroup::kCoding));

  const auto fig7 = figure_preset("fig7");
  CHECK(fig7.atomic_a == 1.0);
  CHECK(fig7.wants(OutputGroup::kSecurity));
  CHECK(figure_preset("fig8").atomic_a == 0.5);
  CHECK(figure_preset("fig9").attack == Attack::kZ);

  std::set<std::string_view> names(preset_names().begin(), preset_names().end());
  CHECK(names.size() == 11);
  for (auto name : preset_names()) {
    const auto c = figure_preset(name);
    CHECK_NOTHROW(c.validate());
    CHECK(tau_grid(c).size() == 1001);
  }
  CHECK_THROWS_AS(figure_preset("fig10"), ConfigError);
}

TEST_CASE("config file parsing") {
  std::istringstream in(
      "# sweep settings\n"
      "nbar = 20\n"
      "a=1   # excited\n"
      "\n"
      "tau_start = 1\n"
      "tau_end = 3\n"
      "tau_step = 0.5\n"
      "attack = z\n"
      "outputs = purity, security\n"
      "tail_tolerance = 1e-10\n"
      "threads = 2\n");
  const auto c = parse_config(in);
  CHECK(c.mean_photon == 20.0);
  CHECK(c.atomic_a == 1.0);
  CHECK(c.tau_start == 1.0);
  CHECK(c.tau_end == 3.0);
  CHECK(c.tau_step == 0.5);
  CHECK(c.attack == Attack::kZ);
  CHECK(c.outputs ==
        std::vector<OutputGroup>{OutputGroup::kPurity, OutputGroup::kSecurity});
  CHECK(c.tail_tolerance == 1e-10);
  CHECK(c.threads == 2);

  std::istringstream empty_outputs("outputs =\n");
  CHECK(parse_config(empty_outputs).outputs.empty());

  std::istringstream bad_key("colour = blue\n");
  CHECK_THROWS_AS(parse_config(bad_key), ConfigError);
  std::istringstream bad_value("nbar = lots\n");
  CHECK_THROWS_AS(parse_config(bad_value), ConfigError);
  std::istringstream no_equals("nbar 3\n");
  CHECK_THROWS_AS(parse_config(no_equals), ConfigError);
  std::istringstream bad_attack("attack = w\n");
  CHECK_THROWS_AS(parse_config(bad_attack), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/tcqed.cfg"), IoError);
}

TEST_CASE("config validation") {
  SweepConfig c;
  c.tau_step = 0.0;
  CHECK_THROWS_AS(run_sweep(c), ConfigError);
  c = SweepConfig{};
  c.tau_end = -1.0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SweepConfig{};
  c.atomic_a = 1.2;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SweepConfig{};
  c.mean_photon = 1000.0;
  CHECK_THROWS_AS(run_sweep(c), ResourceError);
}

TEST_CASE("plot script references the csv and masks purity") {
  const auto c = figure_preset("fig1");
  std::ostringstream out;
  emit_plotscript(out, c, "fig1", "fig1.csv");
  const std::string script = out.str();
  CHECK(script.find("'fig1.csv'") != std::string::npos);
  CHECK(script.find("set datafile separator ','") != std::string::npos);
  // entangled_none is column 6 for the purity + ppt preset.
  CHECK(script.find("($6 == 1 ? $2 : NaN)") != std::string::npos);
}

}  // namespace
}  // namespace tcqed
