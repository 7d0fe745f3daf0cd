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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "instances.hpp"
#include "toruslab/cli/commands.hpp"
#include "toruslab/cli/fuzz.hpp"

using namespace toruslab;
using namespace toruslab::cli;
using namespace toruslab::testing;
namespace fs = std::filesystem;

namespace {

fs::path config_path(const std::string& name) { return fs::path(TORUSLAB_CONFIG_DIR) / name; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "toruslab_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

std::string pointer_of(const json& j) {
  try {
    parse_config(j);
  } catch (const ConfigError& e) {
    return e.pointer();
  }
  return "<no error>";
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(TORUSLAB_CLI_EXE) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

json quantum_config() {
  return json::parse(R"({"kind": "quantum-plus", "n": 2,
                         "cocycle": {"type": "quantum", "q": [["1", "w"], ["w^2", "1"]]}})");
}

}  // namespace

TEST(Schema, MalformedMatrixNamesTheRow) {
  json j = quantum_config();
  j["cocycle"]["q"][1] = json::array({"w^2"});
  EXPECT_EQ(pointer_of(j), "/cocycle/q/1");
}

TEST(Schema, Pointers) {
  json j = quantum_config();
  j.erase("kind");
  EXPECT_EQ(pointer_of(j), "/kind");

  j = quantum_config();
  j["cocycle"]["q"][0][1] = "w^";
  EXPECT_EQ(pointer_of(j), "/cocycle/q/0/1");

  j = quantum_config();
  j["colour"] = 1;
  EXPECT_EQ(pointer_of(j), "/colour");

  j = quantum_config();
  j["verify"] = {{"checks", {"jordan", "nonsense"}}};
  EXPECT_EQ(pointer_of(j), "/verify/checks/1");

  j = quantum_config();
  j["verify"] = {{"window", 0}};
  EXPECT_EQ(pointer_of(j), "/verify/window");

  j = quantum_config();
  j["cocycle"]["q"][0][1] = "s";
  EXPECT_EQ(pointer_of(j), "/cocycle/q/0/1");

  j = json::parse(R"({"kind": "clifford", "n": 2, "gamma": [[2, 0], [0, 2]],
                      "reps": [[0, 0], [1, 0], [0, 1]], "a": {"1": "1"}})");
  EXPECT_EQ(pointer_of(j), "/a/2");

  j = json::parse(R"({"kind": "albert", "n": 4, "gamma": [[3, 0, 0, 0]], "delta": [],
                      "sigma": [[1, 0, 0, 0], [0, 1, 0], [0, 0, 1, 0]]})");
  EXPECT_EQ(pointer_of(j), "/sigma/1");
}

TEST(Schema, FieldInference) {
  EXPECT_EQ(parse_config(quantum_config()).field, FieldDescriptor::cyclotomic3());
  json j = json::parse(R"({"kind": "assoc-only", "n": 1, "cocycle": {"type": "trivial"}})");
  EXPECT_EQ(parse_config(j).field, FieldDescriptor::rational());
  j["field"] = "Q(sqrt(-1))";
  EXPECT_EQ(parse_config(j).field, FieldDescriptor::quadratic(-1));
  j["field"] = {{"d", "5"}};
  EXPECT_EQ(parse_config(j).field, FieldDescriptor::quadratic(5));
  EXPECT_EQ(load_config(config_path("albert_standard.json")).field, FieldDescriptor::cyclotomic3());
}

TEST(Schema, WindowDefaults) {
  EXPECT_EQ(load_config(config_path("albert_standard.json")).plan.window, 1);
  EXPECT_EQ(load_config(config_path("clifford_standard.json")).plan.window, 2);
}

TEST(ExitCodes, Contract) {
  EXPECT_EQ(run_cli("verify --config " + config_path("clifford_standard.json").string()), 0);
  EXPECT_EQ(run_cli("verify --config " + config_path("perturbed_cocycle.json").string()), 1);
  EXPECT_EQ(run_cli("build --config " + config_path("involution_incompatible.json").string()), 1);
  std::ofstream(scratch("bad.json")) << R"({"kind": "quantum-plus", "n": 2, "cocycle": {"type": "quantum", "q": [[1]]}})";
  EXPECT_EQ(run_cli("verify --config " + scratch("bad.json").string()), 2);
  EXPECT_EQ(run_cli("verify --config " + config_path("quantum_omega.json").string() + " --checks jordan,bogus"), 2);
  EXPECT_EQ(run_cli("table --config " + config_path("trivial.json").string() + " --format csv"), 0);
}

TEST(Verify, CliffordStrongTypeIsInformative) {
  const VerifyOutcome v = verify(load_config(config_path("clifford_standard.json")));
  ASSERT_TRUE(v.passed) << v.summary;
  const json& st = v.report["checks"]["strong-type"];
  EXPECT_EQ(st["verdict"], "informative");
  EXPECT_EQ(v.report["properties"]["strong_type"], false);
  // Expected zero pairs: both degrees in S with different nonzero reps.
  const auto t = standard_clifford_triple();
  std::set<std::pair<GroupElement, GroupElement>> expected;
  const auto pts = window_points(2, 2);
  for (const auto& s : pts)
    for (const auto& u : pts) {
      const auto a = grading_component(*t, s), b = grading_component(*t, u);
      if (a && b && a->rep != 0 && b->rep != 0 && a->rep != b->rep) expected.insert({s, u});
    }
  std::set<std::pair<GroupElement, GroupElement>> got;
  for (const auto& o : st["observations"])
    got.insert({GroupElement(o["elements"][0].get<std::vector<std::int64_t>>()),
                GroupElement(o["elements"][1].get<std::vector<std::int64_t>>())});
  EXPECT_EQ(got, expected);
  EXPECT_FALSE(expected.empty());
}

TEST(Verify, AlbertStandardPasses) {
  const VerifyOutcome v = verify(load_config(config_path("albert_standard.json")));
  EXPECT_TRUE(v.passed) << v.summary;
  for (const char* name : {"triple", "cocycle", "centrality", "jordan", "axioms.t1", "axioms.t2", "axioms.t3",
                           "strong-type", "grading", "cubic"})
    EXPECT_TRUE(v.report["checks"].contains(name)) << name;
  EXPECT_EQ(v.report["properties"]["strong_type"], true);
}

TEST(Verify, NegativeControlReportsWitnessTriple) {
  const VerifyOutcome v = verify(load_config(config_path("perturbed_cocycle.json")));
  EXPECT_FALSE(v.passed);
  const json& c = v.report["checks"]["cocycle"];
  EXPECT_EQ(c["verdict"], "fail");
  EXPECT_EQ(c["witness"]["elements"].size(), 3u);
}

TEST(Verify, ConstructionFailuresAreReported) {
  const VerifyOutcome v = verify(load_config(config_path("extension_violating.json")));
  EXPECT_FALSE(v.passed);
  EXPECT_FALSE(v.constructed);
  EXPECT_EQ(v.report["checks"]["construction"]["verdict"], "fail");

  try {
    build_instance(load_config(config_path("involution_incompatible.json")));
    FAIL() << "incompatible quadratic map accepted";
  } catch (const CompatibilityError& e) {
    const std::set<GroupElement> pair{e.first, e.second};
    EXPECT_EQ(pair, (std::set<GroupElement>{{1, 0}, {0, 1}}));
  }
}

TEST(Verify, Overrides) {
  InstanceSpec s = load_config(config_path("quantum_omega.json"));
  Overrides o;
  o.window = 1;
  o.checks = std::set<std::string>{"cocycle"};
  apply(o, s);
  const VerifyOutcome v = verify(s);
  EXPECT_EQ(v.report["window"], 1);
  EXPECT_EQ(v.report["checks"].size(), 1u);
  EXPECT_EQ(v.report["checks"]["cocycle"]["checked"], 9u * 9u * 9u);
}

TEST(Determinism, ReportsAndTablesAreByteIdentical) {
  for (const char* name : {"albert_standard.json", "clifford_standard.json", "involution.json", "extension.json"}) {
    const InstanceSpec s = load_config(config_path(name));
    EXPECT_EQ(verify(s).report.dump(), verify(s).report.dump()) << name;
    const Instance a = build_instance(s), b = build_instance(s);
    EXPECT_EQ(table(a, TableFormat::csv), table(b, TableFormat::csv)) << name;
    EXPECT_EQ(build_descriptor(a).dump(), build_descriptor(b).dump()) << name;
  }
  FuzzOptions o;
  o.family = "clifford";
  o.trials = 5;
  o.adversarial = 3;
  o.seed = 11;
  EXPECT_EQ(run_fuzz(o).report().dump(), run_fuzz(o).report().dump());
}

TEST(Table, QuantumOmegaCoefficients) {
  InstanceSpec s = load_config(config_path("quantum_omega.json"));
  s.plan.window = 1;
  const json t = table_json(build_instance(s));
  EXPECT_EQ(t["rows"].size(), 81u);
  std::set<std::string> coeffs;
  for (const auto& r : t["rows"]) coeffs.insert(r["coeff"].get<std::string>());
  EXPECT_EQ(coeffs, (std::set<std::string>{"1", "w", "-1-w"}));
  // Sorted by (sigma, tau).
  std::vector<std::pair<GroupElement, GroupElement>> keys;
  for (const auto& r : t["rows"])
    keys.push_back({GroupElement(r["sigma"].get<std::vector<std::int64_t>>()),
                    GroupElement(r["tau"].get<std::vector<std::int64_t>>())});
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
}

TEST(Table, TrivialIsAllOnes) {
  const json t = table_json(build_instance(load_config(config_path("trivial.json"))));
  for (const auto& r : t["rows"]) EXPECT_EQ(r["coeff"], "1");
}

TEST(Table, ExtensionUsesFieldFormat) {
  const json t = table_json(build_instance(load_config(config_path("extension.json"))));
  bool generator = false;
  for (const auto& r : t["rows"]) {
    const Scalar c = parse_scalar(r["coeff"].get<std::string>(), FieldDescriptor::cyclotomic3());
    generator = generator || !c.is_rational();
    EXPECT_EQ(c.to_string(), r["coeff"]);
  }
  EXPECT_TRUE(generator);
}

TEST(Table, RoundTripReproducesProducts) {
  for (const char* name : {"quantum_omega.json", "extension.json", "involution.json"}) {
    const Instance inst = build_instance(load_config(config_path(name)));
    const fs::path dump = scratch(std::string("table_") + name);
    std::ofstream(dump) << table(inst, TableFormat::json);
    json cfg{{"kind", "assoc-only"},
             {"n", inst.spec.rank},
             {"field", field_text(inst.spec.field)},
             {"cocycle", {{"type", "table"}, {"from", dump.string()}}}};
    const Instance back = build_instance(parse_config(cfg));
    const auto pts = window_points(inst.spec.rank, inst.spec.plan.window);
    for (const auto& s : pts)
      for (const auto& t : pts) {
        const AssocElement p = AssocElement::basis(inst.cocycle, s) * AssocElement::basis(inst.cocycle, t);
        const AssocElement q = AssocElement::basis(back.cocycle, s) * AssocElement::basis(back.cocycle, t);
        ASSERT_EQ(p.to_string(), q.to_string()) << name << " " << s << " " << t;
      }
    EXPECT_TRUE(cocycle_identity_check(*back.cocycle, inst.spec.plan.window).passed()) << name;
  }
}

TEST(Table, JordanTablesAreNotReingested) {
  const Instance inst = build_instance(load_config(config_path("clifford_standard.json")));
  const fs::path dump = scratch("clifford_table.json");
  std::ofstream(dump) << table(inst, TableFormat::json);
  json cfg{{"kind", "assoc-only"}, {"n", 2}, {"cocycle", {{"type", "table"}, {"from", dump.string()}}}};
  EXPECT_EQ(pointer_of(cfg), "/cocycle/from");
}

TEST(Build, Descriptors) {
  const json a = build_descriptor(build_instance(load_config(config_path("albert_standard.json"))));
  EXPECT_EQ(a["gamma_cosets"], 27);
  EXPECT_EQ(a["support"].size(), 81u);
  EXPECT_EQ(a["structure_constants"].size(), 81u * 81u);
  for (const auto& r : a["structure_constants"]) EXPECT_NE(r["coeff"], "0");
  EXPECT_EQ(a["central_grading_group"]["quotient"]["torsion"], json({3, 3, 3}));

  const json c = build_descriptor(build_instance(load_config(config_path("clifford_standard.json"))));
  const auto t = standard_clifford_triple();
  for (const auto& p : c["support"]) EXPECT_TRUE(t->support_set().contains(GroupElement(p.get<std::vector<std::int64_t>>())));
  std::size_t in_s = 0;
  for (const auto& p : window_points(2, 2)) in_s += t->support_set().contains(p) ? 1 : 0;
  EXPECT_EQ(c["support"].size(), in_s);
  EXPECT_EQ(c["central_grading_group"]["basis"], json({{2, 0}, {0, 2}}));
  EXPECT_EQ(c["type_tag"], "clifford");
}

TEST(Fuzz, SmallRunsAreClean) {
  for (const auto& family : fuzz_families()) {
    FuzzOptions o;
    o.family = family;
    o.trials = family == "albert" ? 4 : 12;
    o.adversarial = 4;
    o.seed = 5;
    o.out = scratch("fuzz");
    const FuzzResult r = run_fuzz(o);
    EXPECT_TRUE(r.passed()) << r.report().dump(2);
    for (const auto& c : r.adversarial) {
      EXPECT_TRUE(fs::exists(*o.out / (c.label + ".json"))) << c.label;
      // The shrunk witness still fails the same way.
      EXPECT_EQ(failure_signature(c.shrunk), c.signature) << c.label;
    }
  }
  EXPECT_THROW(run_fuzz(FuzzOptions{"nope"}), std::invalid_argument);
}

TEST(Fuzz, ShrinkKeepsTheFailure) {
  json cfg = json::parse(R"({"kind": "assoc-only", "n": 2,
      "cocycle": {"type": "quantum", "q": [["1", "w"], ["w^2", "1"]],
                  "perturb": {"sigma": [1, -1], "tau": [1, 1], "factor": "2"}},
      "verify": {"window": 2, "checks": ["cocycle"]}})");
  const std::string sig = failure_signature(cfg);
  ASSERT_FALSE(sig.empty());
  const auto [small, steps] = shrink(cfg, sig);
  EXPECT_GT(steps, 0u);
  EXPECT_EQ(failure_signature(small), sig);
  EXPECT_EQ(small["verify"]["window"], 1);
  EXPECT_EQ(small["cocycle"]["perturb"]["factor"], "2");
}
