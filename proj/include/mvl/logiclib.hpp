/*
 * Copyright (C) 2026 mvl contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvl/argument.hpp"
#include "mvl/semantics.hpp"
#include "mvl/structure.hpp"

namespace mvl {

struct ExpectedProperty {
  std::string property;  // "monotonic", "reflexive", "transitive", "permeable"
  bool holds = false;
};

// Supervaluationist consequence over a small formula list: no truth relation exists, so
// the verdicts and the per-world traces are stored explicitly.
struct SupervaluationData {
  std::vector<Formula> formulas;
  ArgumentTable table;
  std::vector<TracedArgument> traces;  // every argument over `formulas`, premise set major
};

struct BuiltinSpec {
  std::string name;
  std::string description;
  Semantics semantics;
  std::vector<ExpectedProperty> expected_properties;
  int expected_rank = 0;             // mixed Suszko rank
  std::string rank_basis;            // "theorem" (from the property profile) or "oracle"
  std::optional<int> expected_tf_rank;  // truth-functional rank on the constants fragment
  std::optional<SupervaluationData> supervaluation;
};

// classical, k3, lp, st, ts, mixed4, order-2 .. order-5, product2, supervaluationist-fragment.
std::vector<std::string> builtin_names();
// Throws DomainError for unknown names. The self-test runs on every call.
BuiltinSpec builtin(const std::string& name);

// Re-checks every expected property (truth level, or on the stored table for the
// supervaluationist fragment) and the rank the property profile predicts.
std::vector<PropertyReport> self_test(const BuiltinSpec& spec);

// Truth-level structural reports of a relation: monotonic, reflexive, transitive, permeable.
std::vector<PropertyReport> truth_level_profile(const Semantics& s);

}  // namespace mvl
