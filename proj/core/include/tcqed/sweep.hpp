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

// Time sweeps over tau, the CSV row model, and the figure presets.
//
// CSV columns, in this order and pruned to the requested groups:
//
//   tau                          always
//   eta12, eta1, eta2            purity: 1 - tr rho^2 of the pair and atoms
//   ppt_min_<v>, entangled_<v>   ppt: min eigenvalue of the partial
//                                transpose of the attacked pair, and its
//                                verdict; <v> = none plus the attack(s)
//   F0, F1, F2, F3               fidelity: overlap of rho with its
//                                I / X / Y / Z rotation of qubit 1
//   I_bob                        coding or security: Holevo bound of uniform
//                                dense coding (also plotted as I_AB)
//   D, I_ae, secure              security: disturbance, Alice-Eve mutual
//                                information, security inequality verdict
//
// Booleans are written as 0/1.

#ifndef TCQED_SWEEP_HPP_
#define TCQED_SWEEP_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tcqed/hilbert.hpp"
#include "tcqed/measures.hpp"

namespace tcqed {

enum class Attack { kNone, kX, kY, kZ, kAll };

enum class OutputGroup {
  kPurity,
  kPpt,
  kFidelity,
  kCoding,
  kSecurity,
  kAnalyticCheck,
};

Attack parse_attack(std::string_view name);
std::string_view attack_name(Attack attack);
OutputGroup parse_output_group(std::string_view name);
std::string_view output_group_name(OutputGroup group);

struct SweepConfig {
  double mean_photon = 10.0;
  double atomic_a = 0.5;
  double tau_start = 0.0;
  double tau_end = 50.0;
  double tau_step = 0.05;
  Attack attack = Attack::kNone;
  double tail_tolerance = kDefaultTailTolerance;
  std::vector<OutputGroup> outputs = {OutputGroup::kPurity, OutputGroup::kPpt,
                                      OutputGroup::kFidelity,
                                      OutputGroup::kCoding,
                                      OutputGroup::kSecurity};
  /// Worker threads for the tau loop; 0 picks the hardware concurrency.
  unsigned threads = 0;

  bool wants(OutputGroup group) const;
  /// Throws ConfigError on an invalid grid, a outside [0, 1], or a bad
  /// tolerance.
  void validate() const;
};

/// Applies one `key = value` setting. Keys mirror the field names; `nbar`
/// and `a` are accepted as aliases of mean_photon and atomic_a.
void apply_setting(SweepConfig& config, std::string_view key,
                   std::string_view value);

/// Flat key/value text: one `key = value` per line, '#' starts a comment.
SweepConfig parse_config(std::istream& in, SweepConfig base = {});
SweepConfig load_config(const std::filesystem::path& path,
                        SweepConfig base = {});

/// floor((end - start) / step) + 1 points, tau_k = start + k * step.
std::vector<double> tau_grid(const SweepConfig& config);

struct SweepRecord {
  double tau = 0.0;
  ImpurityTriple eta;
  /// Indexed by Pauli: [0] is the unattacked pair, [1..3] the X/Y/Z attacks.
  std::array<PptReport, 4> ppt;
  std::array<double, 4> fidelity{};
  double bob_info = 0.0;
  double disturbance = 0.0;
  double eve_info = 0.0;
  bool secure = false;
};

/// Deterministic: records come back in tau order however many threads run.
/// Throws ConfigError for an invalid config and NumericalError (including
/// ResourceError) when a numerical contract breaks.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

/// Names accepted by figure_preset, one per figure panel.
std::span<const std::string_view> preset_names();

/// Throws ConfigError for an unknown name.
SweepConfig figure_preset(std::string_view name);

std::vector<std::string> csv_columns(const SweepConfig& config);

void emit_csv(std::ostream& out, std::span<const SweepRecord> records,
              const SweepConfig& config);
/// Throws IoError if the file cannot be written.
void emit_csv(const std::filesystem::path& path,
              std::span<const SweepRecord> records, const SweepConfig& config);

/// gnuplot commands plotting `csv_path`. Purity curves are masked to
/// entangled samples when the entangled_none column is present.
void emit_plotscript(std::ostream& out, const SweepConfig& config,
                     std::string_view preset,
                     const std::filesystem::path& csv_path);
void emit_plotscript(const std::filesystem::path& path,
                     const SweepConfig& config, std::string_view preset,
                     const std::filesystem::path& csv_path);

}  // namespace tcqed

#endif  // TCQED_SWEEP_HPP_
