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

// tcqed: tau sweeps of the two-atom cavity model.
//
//   tcqed sweep [--config FILE] [--nbar X --a X --tau-start X --tau-end X
//               --tau-step X --attack none|x|y|z|all --outputs LIST]
//               [--out CSV] [--plot SCRIPT]
//   tcqed preset NAME [--out CSV] [--plot SCRIPT]
//   tcqed check-analytic [--config FILE | --preset NAME] [--out CSV]
//
// Exit codes: 0 success, 1 config error, 2 numerical contract violation,
// 3 I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tcqed/analytic.hpp"
#include "tcqed/error.hpp"
#include "tcqed/sweep.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kConfig = 1,
  kNumerical = 2,
  kIo = 3,
};

struct Overrides {
  std::optional<double> nbar;
  std::optional<double> a;
  std::optional<double> tau_start;
  std::optional<double> tau_end;
  std::optional<double> tau_step;
  std::optional<std::string> attack;
  std::optional<std::string> outputs;
  std::optional<double> tail_tolerance;
  std::optional<unsigned> threads;

  void add_to(CLI::App* app) {
    app->add_option("--nbar", nbar, "Mean photon number of the coherent field");
    app->add_option("--a", a, "Excited amplitude of atom 2 (b = sqrt(1-a^2))");
    app->add_option("--tau-start", tau_start, "First scaled time");
    app->add_option("--tau-end", tau_end, "Last scaled time");
    app->add_option("--tau-step", tau_step, "Scaled time step");
    app->add_option("--attack", attack, "none|x|y|z|all");
    app->add_option("--outputs", outputs,
                    "Comma list of purity,ppt,fidelity,coding,security,"
                    "analytic_check");
    app->add_option("--tail-tolerance", tail_tolerance,
                    "Discarded Poisson tail of the field");
    app->add_option("--threads", threads, "Worker threads (0 = all cores)");
  }

  void apply(tcqed::SweepConfig& c) const {
    if (nbar) c.mean_photon = *nbar;
    if (a) c.atomic_a = *a;
    if (tau_start) c.tau_start = *tau_start;
    if (tau_end) c.tau_end = *tau_end;
    if (tau_step) c.tau_step = *tau_step;
    if (attack) c.attack = tcqed::parse_attack(*attack);
    if (outputs) tcqed::apply_setting(c, "outputs", *outputs);
    if (tail_tolerance) c.tail_tolerance = *tail_tolerance;
    if (threads) c.threads = *threads;
  }
};

std::filesystem::path analytic_path(const std::filesystem::path& out) {
  std::filesystem::path p = out;
  p.replace_extension();
  p += ".analytic.csv";
  return p;
}

void write_deviation(const tcqed::SweepConfig& config,
                     const std::optional<std::filesystem::path>& out) {
  const auto taus = tcqed::tau_grid(config);
  const tcqed::Scenario scenario{config.mean_photon, config.atomic_a,
                                 config.tail_tolerance};
  const auto rows = tcqed::cross_check(taus, scenario);
  if (!out) {
    tcqed::write_deviation_csv(std::cout, rows);
    return;
  }
  std::ofstream f(*out, std::ios::binary);
  if (!f) throw tcqed::IoError("cannot open " + out->string());
  tcqed::write_deviation_csv(f, rows);
  f.flush();
  if (!f) throw tcqed::IoError("failed writing " + out->string());
}

void run(const tcqed::SweepConfig& config, std::string_view preset,
         const std::optional<std::filesystem::path>& out,
         const std::optional<std::filesystem::path>& plot) {
  const auto records = tcqed::run_sweep(config);
  if (out) {
    tcqed::emit_csv(*out, records, config);
  } else {
    tcqed::emit_csv(std::cout, records, config);
  }
  if (plot) {
    tcqed::emit_plotscript(*plot, config, preset,
                           out ? *out : std::filesystem::path("sweep.csv"));
  }
  if (config.wants(tcqed::OutputGroup::kAnalyticCheck)) {
    write_deviation(config, analytic_path(out ? *out : "sweep.csv"));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-atom cavity QED purity, entanglement and coding sweeps"};
  app.require_subcommand(1);

  std::optional<std::filesystem::path> config_path;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> plot;
  Overrides overrides;
  std::string preset_name;
  std::optional<std::string> check_preset;

  auto* sweep = app.add_subcommand("sweep", "Run a tau sweep");
  sweep->add_option("--config", config_path, "Key/value config file");
  sweep->add_option("--out", out, "CSV output path (stdout if omitted)");
  sweep->add_option("--plot", plot, "Write a gnuplot script here");
  overrides.add_to(sweep);

  auto* preset = app.add_subcommand("preset", "Reproduce one figure's data");
  preset->add_option("name", preset_name, "fig1..fig9, fig4a/b, fig5a/b")
      ->required();
  preset->add_option("--out", out, "CSV output path (stdout if omitted)");
  preset->add_option("--plot", plot, "Write a gnuplot script here");
  overrides.add_to(preset);

  auto* check = app.add_subcommand(
      "check-analytic", "Compare the closed-form series with the solver");
  check->add_option("--config", config_path, "Key/value config file");
  check->add_option("--preset", check_preset, "Use a figure preset instead");
  check->add_option("--out", out, "CSV output path (stdout if omitted)");
  overrides.add_to(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (sweep->parsed()) {
      tcqed::SweepConfig config;
      if (config_path) config = tcqed::load_config(*config_path);
      overrides.apply(config);
      run(config, "", out, plot);
    } else if (preset->parsed()) {
      tcqed::SweepConfig config = tcqed::figure_preset(preset_name);
      overrides.apply(config);
      run(config, preset_name, out, plot);
    } else if (check->parsed()) {
      tcqed::SweepConfig config;
      if (check_preset) config = tcqed::figure_preset(*check_preset);
      if (config_path) config = tcqed::load_config(*config_path, config);
      overrides.apply(config);
      write_deviation(config, out);
    }
  } catch (const tcqed::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const tcqed::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const tcqed::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kNumerical;
  }
  return kOk;
}
