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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toruslab/lattice.hpp"

namespace toruslab {

enum class Verdict {
  pass,
  fail,
  /// Holds on the inspected window; the statement is about an infinite set.
  window_verified,
  /// The property does not hold, and that is the expected outcome.
  informative,
};

std::string_view to_string(Verdict v);

struct Witness {
  std::string description;
  std::vector<GroupElement> elements;
  std::vector<std::string> values;
};

/// Outcome of one verification sweep.
struct CheckReport {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::uint64_t checked = 0;
  bool sampled = false;
  std::string detail;
  std::optional<Witness> witness;
  /// Non-failing findings worth reporting (e.g. pairs with zero product).
  std::vector<Witness> observations;

  bool passed() const { return verdict != Verdict::fail; }
  void fail(Witness w) {
    verdict = Verdict::fail;
    witness = std::move(w);
  }
};

}  // namespace toruslab
