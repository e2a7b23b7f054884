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

#include "tcqed/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "tcqed/csv.hpp"
#include "tcqed/dynamics.hpp"
#include "tcqed/error.hpp"
#include "tcqed/protocol.hpp"
#include "tcqed/reduced.hpp"

namespace tcqed {
namespace {

constexpr std::array<std::string_view, 5> kAttackNames = {"none", "x", "y",
                                                          "z", "all"};
constexpr std::array<std::string_view, 6> kGroupNames = {
    "purity", "ppt", "fidelity", "coding", "security", "analytic_check"};
constexpr std::array<std::string_view, 4> kVariantNames = {"none", "x", "y",
                                                           "z"};
constexpr std::array<std::string_view, 11> kPresetNames = {
    "fig1",  "fig2",  "fig3", "fig4a", "fig4b", "fig5a",
    "fig5b", "fig6",  "fig7", "fig8",  "fig9"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("config: '" + std::string(key) +
                      "' expects a number, got '" + std::string(value) + "'");
  }
  return out;
}

unsigned parse_unsigned(std::string_view key, std::string_view value) {
  unsigned out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("config: '" + std::string(key) +
                      "' expects a nonnegative integer");
  }
  return out;
}

// PPT variants reported for a given attack setting; the unattacked pair is
// always included.
std::vector<std::size_t> ppt_variants(Attack attack) {
  switch (attack) {
    case Attack::kNone:
      return {0};
    case Attack::kX:
      return {0, 1};
    case Attack::kY:
      return {0, 2};
    case Attack::kZ:
      return {0, 3};
    case Attack::kAll:
      return {0, 1, 2, 3};
  }
  return {0};
}

SweepRecord measure(double tau, const TwoQubitDensity& rho, Attack attack) {
  SweepRecord r;
  r.tau = tau;
  r.eta = impurities(rho);
  for (Pauli p : kAllPaulis) {
    const auto i = static_cast<std::size_t>(p);
    r.ppt[i] = ppt_report(pauli_channel(rho, p));
    r.fidelity[i] = overlap_fidelity(rho, p);
  }

  // A fixed single-Pauli attack sets Bob's error to the infidelity of that
  // rotation and Bob receives the attacked pair; otherwise the error is the
  // average over the four random Pauli resends.
  double d = 0.0;
  const TwoQubitDensity* channel = &rho;
  std::optional<TwoQubitDensity> attacked;
  switch (attack) {
    case Attack::kX:
    case Attack::kY:
    case Attack::kZ: {
      const auto p = static_cast<Pauli>(static_cast<int>(attack));
      d = attack_disturbance(rho, p);
      attacked.emplace(pauli_channel(rho, p));
      channel = &*attacked;
      break;
    }
    case Attack::kNone:
    case Attack::kAll:
      d = disturbance(rho);
      break;
  }
  const SecurityRecord sec = security_record(*channel, d);
  r.bob_info = sec.bob_info;
  r.disturbance = sec.disturbance;
  r.eve_info = sec.eve_info;
  r.secure = sec.secure;
  return r;
}

}  // namespace

Attack parse_attack(std::string_view name) {
  for (std::size_t i = 0; i < kAttackNames.size(); ++i) {
    if (kAttackNames[i] == name) return static_cast<Attack>(i);
  }
  throw ConfigError("unknown attack '" + std::string(name) +
                    "' (expected none|x|y|z|all)");
}

std::string_view attack_name(Attack attack) {
  return kAttackNames[static_cast<std::size_t>(attack)];
}

OutputGroup parse_output_group(std::string_view name) {
  for (std::size_t i = 0; i < kGroupNames.size(); ++i) {
    if (kGroupNames[i] == name) return static_cast<OutputGroup>(i);
  }
  throw ConfigError("unknown output group '" + std::string(name) + "'");
}

std::string_view output_group_name(OutputGroup group) {
  return kGroupNames[static_cast<std::size_t>(group)];
}

bool SweepConfig::wants(OutputGroup group) const {
  return std::find(outputs.begin(), outputs.end(), group) != outputs.end();
}

void SweepConfig::validate() const {
  if (!(mean_photon >= 0.0) || !std::isfinite(mean_photon)) {
    throw ConfigError("config: mean_photon must be finite and >= 0");
  }
  if (!(atomic_a >= 0.0 && atomic_a <= 1.0)) {
    throw ConfigError("config: atomic_a must lie in [0, 1]");
  }
  if (!(tau_step > 0.0) || !std::isfinite(tau_step)) {
    throw ConfigError("config: tau_step must be > 0");
  }
  if (!(tau_start >= 0.0) || !std::isfinite(tau_start)) {
    throw ConfigError("config: tau_start must be >= 0");
  }
  if (!(tau_end >= tau_start) || !std::isfinite(tau_end)) {
    throw ConfigError("config: tau_end must be >= tau_start");
  }
  if (!(tail_tolerance > 0.0 && tail_tolerance < 1.0)) {
    throw ConfigError("config: tail_tolerance must be in (0, 1)");
  }
}

void apply_setting(SweepConfig& config, std::string_view key,
                   std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "mean_photon" || key == "nbar") {
    config.mean_photon = parse_double(key, value);
  } else if (key == "atomic_a" || key == "a") {
    config.atomic_a = parse_double(key, value);
  } else if (key == "tau_start") {
    config.tau_start = parse_double(key, value);
  } else if (key == "tau_end") {
    config.tau_end = parse_double(key, value);
  } else if (key == "tau_step") {
    config.tau_step = parse_double(key, value);
  } else if (key == "tail_tolerance") {
    config.tail_tolerance = parse_double(key, value);
  } else if (key == "attack") {
    config.attack = parse_attack(value);
  } else if (key == "threads") {
    config.threads = parse_unsigned(key, value);
  } else if (key == "outputs") {
    config.outputs.clear();
    std::size_t pos = 0;
    while (pos <= value.size()) {
      const auto comma = value.find(',', pos);
      const auto item = trim(value.substr(
          pos, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - pos));
      if (!item.empty()) {
        const OutputGroup g = parse_output_group(item);
        if (!config.wants(g)) config.outputs.push_back(g);
      }
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  } else {
    throw ConfigError("config: unknown key '" + std::string(key) + "'");
  }
}

SweepConfig parse_config(std::istream& in, SweepConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected 'key = value'");
    }
    apply_setting(base, view.substr(0, eq), view.substr(eq + 1));
  }
  return base;
}

SweepConfig load_config(const std::filesystem::path& path, SweepConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  return parse_config(in, std::move(base));
}

std::vector<double> tau_grid(const SweepConfig& config) {
  config.validate();
  const double span = (config.tau_end - config.tau_start) / config.tau_step;
  // The slack absorbs representation error in e.g. 50 / 0.05.
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> taus(count);
  for (std::size_t k = 0; k < count; ++k) {
    taus[k] = config.tau_start + static_cast<double>(k) * config.tau_step;
  }
  return taus;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  config.validate();
  const std::vector<double> taus = tau_grid(config);

  const FockAmplitudes field =
      coherent_amplitudes(config.mean_photon, config.tail_tolerance);
  const JointState psi0 =
      initial_state(AtomicInit::from_real(config.atomic_a), field, 2);
  DynamicsConfig dyn;
  dyn.tail_tolerance = config.tail_tolerance;
  const Propagator propagator(psi0.cutoff(), dyn);

  std::vector<SweepRecord> records(taus.size());
  unsigned workers = config.threads != 0 ? config.threads
                                         : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1,
                                 static_cast<unsigned>(taus.size()));

  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&](std::size_t begin, std::size_t end) {
    try {
      for (std::size_t k = begin; k < end; ++k) {
        const JointState psi = propagator.evolve(psi0, taus[k]);
        records[k] = measure(taus[k], trace_field(psi), config.attack);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0, taus.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (taus.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < taus.size(); begin += chunk) {
      pool.emplace_back(work, begin, std::min(taus.size(), begin + chunk));
    }
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::span<const std::string_view> preset_names() { return kPresetNames; }

SweepConfig figure_preset(std::string_view name) {
  using G = OutputGroup;
  SweepConfig c;
  c.mean_photon = 20.0;
  c.tau_start = 0.0;
  c.tau_end = 50.0;
  c.tau_step = 0.05;
  c.attack = Attack::kNone;

  if (name == "fig1") {
    c.mean_photon = 10.0;
    c.atomic_a = 0.5;
    c.outputs = {G::kPurity, G::kPpt};
  } else if (name == "fig2") {
    c.atomic_a = 0.5;
    c.outputs = {G::kPurity, G::kPpt};
  } else if (name == "fig3") {
    c.atomic_a = 1.0;
    c.outputs = {G::kPurity, G::kPpt};
  } else if (name == "fig4a" || name == "fig4b") {
    c.atomic_a = 1.0;
    c.attack = name == "fig4a" ? Attack::kX : Attack::kZ;
    c.outputs = {G::kPpt};
  } else if (name == "fig5a" || name == "fig5b") {
    c.atomic_a = 1.0;
    c.attack = name == "fig5a" ? Attack::kX : Attack::kZ;
    c.outputs = {G::kFidelity};
  } else if (name == "fig6") {
    c.atomic_a = 0.5;
    c.outputs = {G::kCoding};
  } else if (name == "fig7") {
    c.atomic_a = 1.0;
    c.outputs = {G::kSecurity};
  } else if (name == "fig8") {
    c.atomic_a = 0.5;
    c.outputs = {G::kSecurity};
  } else if (name == "fig9") {
    c.atomic_a = 0.5;
    c.attack = Attack::kZ;
    c.outputs = {G::kSecurity};
  } else {
    throw ConfigError("unknown preset '" + std::string(name) + "'");
  }
  return c;
}

std::vector<std::string> csv_columns(const SweepConfig& config) {
  std::vector<std::string> cols = {"tau"};
  if (config.wants(OutputGroup::kPurity)) {
    cols.insert(cols.end(), {"eta12", "eta1", "eta2"});
  }
  if (config.wants(OutputGroup::kPpt)) {
    const auto variants = ppt_variants(config.attack);
    for (auto v : variants) {
      cols.push_back("ppt_min_" + std::string(kVariantNames[v]));
    }
    for (auto v : variants) {
      cols.push_back("entangled_" + std::string(kVariantNames[v]));
    }
  }
  if (config.wants(OutputGroup::kFidelity)) {
    cols.insert(cols.end(), {"F0", "F1", "F2", "F3"});
  }
  if (config.wants(OutputGroup::kCoding) ||
      config.wants(OutputGroup::kSecurity)) {
    cols.push_back("I_bob");
  }
  if (config.wants(OutputGroup::kSecurity)) {
    cols.insert(cols.end(), {"D", "I_ae", "secure"});
  }
  return cols;
}

void emit_csv(std::ostream& out, std::span<const SweepRecord> records,
              const SweepConfig& config) {
  if (records.empty()) throw ConfigError("emit_csv: no records");
  const auto cols = csv_columns(config);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    out << (i ? "," : "") << cols[i];
  }
  out << '\n';

  const bool purity = config.wants(OutputGroup::kPurity);
  const bool ppt = config.wants(OutputGroup::kPpt);
  const bool fidelity = config.wants(OutputGroup::kFidelity);
  const bool bob = config.wants(OutputGroup::kCoding) ||
                   config.wants(OutputGroup::kSecurity);
  const bool security = config.wants(OutputGroup::kSecurity);
  const auto variants = ppt_variants(config.attack);

  std::string row;
  for (const auto& r : records) {
    row = format_number(r.tau);
    auto put = [&row](double v) {
      row += ',';
      row += format_number(v);
    };
    auto flag = [&row](bool b) { row += b ? ",1" : ",0"; };
    if (purity) {
      put(r.eta.eta12);
      put(r.eta.eta1);
      put(r.eta.eta2);
    }
    if (ppt) {
      for (auto v : variants) put(r.ppt[v].min_eigenvalue);
      for (auto v : variants) flag(r.ppt[v].entangled);
    }
    if (fidelity) {
      for (double f : r.fidelity) put(f);
    }
    if (bob) put(r.bob_info);
    if (security) {
      put(r.disturbance);
      put(r.eve_info);
      flag(r.secure);
    }
    out << row << '\n';
  }
}

void emit_csv(const std::filesystem::path& path,
              std::span<const SweepRecord> records, const SweepConfig& config) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  emit_csv(out, records, config);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

void emit_plotscript(std::ostream& out, const SweepConfig& config,
                     std::string_view preset,
                     const std::filesystem::path& csv_path) {
  const auto cols = csv_columns(config);
  auto column = [&](std::string_view name) -> std::size_t {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (cols[i] == name) return i + 1;
    }
    return 0;
  };
  const std::size_t mask = column("entangled_none");

  out << "# gnuplot script for " << (preset.empty() ? "sweep" : preset)
      << "\n";
  out << "set datafile separator ','\n";
  out << "set key autotitle columnhead\n";
  out << "set xlabel 'tau'\n";
  out << "set terminal pngcairo size 1000,400\n";
  std::filesystem::path png = csv_path;
  png.replace_extension(".png");
  out << "set output '" << png.generic_string() << "'\n";

  std::vector<std::string> series;
  const std::string file = "'" + csv_path.generic_string() + "'";
  for (std::size_t i = 1; i < cols.size(); ++i) {
    const auto& name = cols[i];
    const bool show_secure = name == "secure" && preset == "fig9";
    if (name.rfind("entangled_", 0) == 0 || (name == "secure" && !show_secure)) {
      continue;
    }
    const std::size_t c = i + 1;
    std::ostringstream s;
    const bool masked_purity =
        mask != 0 && (name == "eta12" || name == "eta1" || name == "eta2");
    if (masked_purity) {
      s << file << " using 1:($" << mask << " == 1 ? $" << c
        << " : NaN) with lines title '" << name << " (entangled)'";
    } else if ((name == "I_bob" || name == "I_ae") && column("secure") != 0 &&
               preset != "fig9") {
      // Security figures show the informations where the inequality holds.
      s << file << " using 1:($" << column("secure") << " == 1 ? $" << c
        << " : NaN) with lines title '"
        << (name == "I_bob" ? "I_AB" : "I_AE") << " (secure)'";
    } else if (show_secure) {
      s << file << " using 1:" << c << " with steps title 'secure'";
    } else {
      s << file << " using 1:" << c << " with lines title '" << name << "'";
    }
    series.push_back(s.str());
  }
  if (series.empty()) {
    out << "# no measure columns selected\n";
    return;
  }
  out << "plot ";
  for (std::size_t i = 0; i < series.size(); ++i) {
    out << (i ? ", \\\n     " : "") << series[i];
  }
  out << '\n';
}

void emit_plotscript(const std::filesystem::path& path,
                     const SweepConfig& config, std::string_view preset,
                     const std::filesystem::path& csv_path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  emit_plotscript(out, config, preset, csv_path);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace tcqed
