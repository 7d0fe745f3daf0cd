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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toruslab/cli/config.hpp"

namespace toruslab::cli {

/// Command-line overrides of the config's verify section.
struct Overrides {
  std::optional<std::int64_t> window;
  std::optional<std::uint64_t> seed;
  std::optional<std::set<std::string>> checks;
};

void apply(const Overrides& o, InstanceSpec& spec);

/// Checks that make sense for the kind, in report order.
std::vector<std::string> applicable_checks(InstanceKind kind);

json report_json(const CheckReport& r);

/// Runs the planned checks on a built instance. Every report is renamed to
/// its plan key ("axioms" yields axioms.t1, axioms.t2, axioms.t3).
std::vector<CheckReport> run_checks(const Instance& inst, const VerifyPlan& plan);

struct VerifyOutcome {
  bool passed = false;
  bool constructed = false;
  std::vector<CheckReport> checks;
  json report;
  std::string summary;
};

/// Builds and verifies; construction failures become a failed
/// "construction" check instead of an exception.
VerifyOutcome verify(const InstanceSpec& spec);

/// Descriptor of a built instance: support window, central grading group,
/// type tag and structure constants.
json build_descriptor(const Instance& inst);

enum class TableFormat { json, csv };

/// lambda(sigma, tau) rows for associative kinds, Jordan structure constants
/// for clifford and albert; rows sorted by (sigma, tau).
std::string table(const Instance& inst, TableFormat format);
json table_json(const Instance& inst);

}  // namespace toruslab::cli
