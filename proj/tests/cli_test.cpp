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

// Drives the installed command-line tool and checks exit codes and outputs.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
  const std::string cmd =
      std::string(TCQED_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "tcqed_cli_test";
  fs::create_directories(dir);
  return dir;
}

TEST_CASE("sweep with a config file and overrides") {
  const fs::path dir = scratch();
  {
    std::ofstream cfg(dir / "short.cfg");
    cfg << "nbar = 3\na = 0.5\ntau_end = 1\ntau_step = 0.25\n"
           "outputs = purity,coding\n";
  }
  const fs::path out = dir / "short.csv";
  REQUIRE(run("sweep --config " + (dir / "short.cfg").string() +
              " --tau-end 2 --out " + out.string()) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("tau,eta12,eta1,eta2,I_bob\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == 1 + 9);

  // Determinism at the byte level through the CLI.
  const fs::path again = dir / "short2.csv";
  REQUIRE(run("sweep --config " + (dir / "short.cfg").string() +
              " --tau-end 2 --out " + again.string()) == 0);
  CHECK(slurp(again) == csv);
}

TEST_CASE("preset with plot script") {
  const fs::path dir = scratch();
  const fs::path out = dir / "fig4a.csv";
  const fs::path plot = dir / "fig4a.gp";
  REQUIRE(run("preset fig4a --tau-end 2 --out " + out.string() + " --plot " +
              plot.string()) == 0);
  CHECK(slurp(out).rfind(
            "tau,ppt_min_none,ppt_min_x,entangled_none,entangled_x\n", 0) == 0);
  CHECK(slurp(plot).find(out.generic_string()) != std::string::npos);
}

TEST_CASE("check-analytic writes the deviation report") {
  const fs::path dir = scratch();
  const fs::path out = dir / "dev.csv";
  REQUIRE(run("check-analytic --preset fig1 --tau-end 1 --out " + out.string()) ==
          0);
  CHECK(slurp(out).rfind("tau,eta12_numeric,eta12_analytic,abs_dev,norm_defect\n",
                         0) == 0);
}

TEST_CASE("sweep with analytic_check also writes the deviation report") {
  const fs::path dir = scratch();
  const fs::path out = dir / "with_check.csv";
  REQUIRE(run("sweep --nbar 2 --tau-end 1 --outputs purity,analytic_check --out " +
              out.string()) == 0);
  CHECK(fs::exists(dir / "with_check.analytic.csv"));
  CHECK(slurp(out).rfind("tau,eta12,eta1,eta2\n", 0) == 0);
}

TEST_CASE("exit codes") {
  const fs::path dir = scratch();
  CHECK(run("preset fig99") == 1);
  CHECK(run("sweep --a 2") == 1);
  CHECK(run("sweep --attack w") == 1);
  CHECK(run("sweep --bogus-flag") == 1);
  CHECK(run("sweep --config /nonexistent/file.cfg") == 3);
  CHECK(run("sweep --nbar 1000 --tau-end 1") == 2);
  CHECK(run("sweep --nbar 1 --tau-end 1 --out /nonexistent/dir/out.csv") == 3);
}

}  // namespace
