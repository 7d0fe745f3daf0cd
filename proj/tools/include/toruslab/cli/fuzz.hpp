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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "toruslab/cli/config.hpp"

namespace toruslab::cli {

const std::vector<std::string>& fuzz_families();

struct FuzzOptions {
  std::string family;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t adversarial = 10;
  /// Shrunk witness configs are written here when set.
  std::optional<std::filesystem::path> out;
};

struct FuzzCase {
  std::string label;
  std::string mutation;  // empty for valid instances
  bool expected_valid = true;
  bool ok = false;       // clean for valid instances, caught for mutations
  std::string signature;  // failing check and message shape
  std::string detail;
  json config;
  json shrunk;
  std::size_t shrink_steps = 0;
};

struct FuzzResult {
  std::string family;
  std::vector<FuzzCase> valid;
  std::vector<FuzzCase> adversarial;
  bool passed() const;
  json report() const;
};

/// Throws std::invalid_argument for an unknown family.
FuzzResult run_fuzz(const FuzzOptions& o);

/// Failure signature of a config: empty when it parses, builds and verifies.
std::string failure_signature(const json& config);

/// Greedy shrink keeping the failure signature: smaller window, integer
/// entries moved toward 0, scalars replaced by 1. Returns the config and the
/// number of accepted steps.
std::pair<json, std::size_t> shrink(const json& config, const std::string& signature, std::size_t budget = 400);

}  // namespace toruslab::cli
