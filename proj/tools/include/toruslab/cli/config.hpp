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

#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "toruslab/albert.hpp"
#include "toruslab/assoc.hpp"
#include "toruslab/clifford.hpp"
#include "toruslab/jordan.hpp"

namespace toruslab::cli {

using nlohmann::json;

/// Schema violation at a JSON pointer inside the config.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string pointer, const std::string& what)
      : std::runtime_error((pointer.empty() ? std::string("/") : pointer) + ": " + what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

enum class InstanceKind { assoc_only, quantum_plus, involution, extension, clifford, albert };

std::string_view to_string(InstanceKind k);

struct CocycleSpec {
  enum class Type { quantum, bicharacter, trivial, table } type = Type::quantum;
  std::vector<std::vector<Scalar>> matrix;
  std::map<PairKey, Scalar> table;
  struct Perturbation {
    GroupElement sigma;
    GroupElement tau;
    Scalar factor;
  };
  std::optional<Perturbation> perturb;
};

struct QuadraticSpec {
  std::vector<int> basis;
  std::vector<std::vector<int>> pairs;
};

struct CliffordSpec {
  std::vector<GroupElement> gamma;
  std::vector<GroupElement> reps;
  std::vector<Scalar> a;  // one per nonzero rep
};

struct AlbertSpec {
  std::vector<GroupElement> gamma;
  std::vector<GroupElement> delta;
  std::array<GroupElement, 3> sigma;
  std::optional<GroupElement> u3_degree;
  std::optional<Scalar> u3_coeff;
};

/// What to verify and how hard.
struct VerifyPlan {
  std::int64_t window = 2;
  std::set<std::string> checks;  // empty: every check that applies
  std::uint64_t jordan_samples = 20'000;
  std::uint64_t cubic_samples = 20;
  std::uint64_t cocycle_samples = 4'000'000;
  std::uint64_t seed = 1;
};

/// A parsed, schema-valid config. Construction preconditions are not yet
/// checked; build_instance does that.
struct InstanceSpec {
  std::string name;
  InstanceKind kind = InstanceKind::quantum_plus;
  std::size_t rank = 0;
  FieldDescriptor field = FieldDescriptor::rational();
  std::optional<CocycleSpec> cocycle;
  std::optional<QuadraticSpec> quadratic;
  std::optional<CliffordSpec> clifford;
  std::optional<AlbertSpec> albert;
  VerifyPlan plan;
  json echo;
};

/// All check names understood by --checks.
const std::vector<std::string>& known_checks();

/// base_dir resolves relative "from" paths of table cocycles.
InstanceSpec parse_config(const json& j, const std::filesystem::path& base_dir = {});
InstanceSpec load_config(const std::filesystem::path& path);

/// Built objects. Only the members relevant to the kind are set.
struct Instance {
  InstanceSpec spec;
  CocyclePtr cocycle;
  std::optional<GradedInvolution> theta;
  CliffordHandle clifford;
  std::shared_ptr<const AlbertTriple> albert_triple;
  Deg3Handle deg3;
  AlbertHandle albert;
  JordanHandle view;
};

/// Throws ConstructionError (or a subclass) when a precondition fails.
Instance build_instance(const InstanceSpec& spec);

// JSON helpers shared by the commands.
json to_json(const GroupElement& g);
json to_json(const Subgroup& h);
std::string scalar_text(const Scalar& s);
Scalar parse_scalar_json(const json& j, const FieldDescriptor& f, const std::string& pointer);
std::string field_text(const FieldDescriptor& f);

}  // namespace toruslab::cli
