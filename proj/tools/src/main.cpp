// Copyright 2026 The toruslab Authors
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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "toruslab/cli/commands.hpp"
#include "toruslab/cli/fuzz.hpp"
#include "toruslab/errors.hpp"

namespace {

using namespace toruslab;
using namespace toruslab::cli;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kConfig = 2;

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

std::set<std::string> split_checks(const std::string& s) {
  std::set<std::string> out;
  std::stringstream ss(s);
  std::string item;
  const auto& known = known_checks();
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (std::find(known.begin(), known.end(), item) == known.end())
      throw ConfigError("/verify/checks", "unknown check \"" + item + "\" given to --checks");
    out.insert(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toruslab: build and verify graded tori"};
  app.require_subcommand(1);

  std::string config, out, format = "json", checks, family;
  std::optional<std::int64_t> window;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 100, adversarial = 10;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config, "instance config (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out, "output file (default stdout)");
    sub->add_option("--window", window, "window bound B >= 1")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "sampling seed");
  };
  auto* build = app.add_subcommand("build", "write the torus descriptor");
  add_common(build);
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  add_common(verify_cmd);
  verify_cmd->add_option("--checks", checks, "comma-separated subset of checks");
  auto* table_cmd = app.add_subcommand("table", "dump structure constants");
  add_common(table_cmd);
  table_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  auto* fuzz = app.add_subcommand("fuzz", "random and adversarial instances");
  fuzz->add_option("--family", family, "cocycle, clifford, albert or involution")
      ->required()
      ->check(CLI::IsMember(fuzz_families()));
  fuzz->add_option("--seed", seed, "generator seed");
  fuzz->add_option("--trials", trials, "valid instances");
  fuzz->add_option("--adversarial", adversarial, "mutated instances");
  fuzz->add_option("--out", out, "directory for shrunk witness configs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  try {
    if (fuzz->parsed()) {
      FuzzOptions o;
      o.family = family;
      o.seed = seed.value_or(1);
      o.trials = trials;
      o.adversarial = adversarial;
      if (!out.empty()) o.out = out;
      const FuzzResult r = run_fuzz(o);
      std::cout << r.report().dump(2) << "\n";
      std::cerr << "fuzz " << family << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
      return r.passed() ? kOk : kFailed;
    }

    InstanceSpec spec = load_config(config);
    Overrides ov;
    ov.window = window;
    ov.seed = seed;
    if (!checks.empty()) ov.checks = split_checks(checks);
    apply(ov, spec);

    if (verify_cmd->parsed()) {
      const VerifyOutcome v = verify(spec);
      emit(v.report.dump(2) + "\n", out);
      (out.empty() ? std::cerr : std::cout) << v.summary;
      return v.passed ? kOk : kFailed;
    }

    Instance inst;
    try {
      inst = build_instance(spec);
    } catch (const Error& e) {
      std::cerr << "construction failed: " << e.what() << "\n";
      return kFailed;
    }
    if (build->parsed()) {
      emit(build_descriptor(inst).dump(2) + "\n", out);
    } else {
      emit(table(inst, format == "csv" ? TableFormat::csv : TableFormat::json), out);
    }
    return kOk;
  } catch (const ConfigError& e) {
    std::cerr << "config error at " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
