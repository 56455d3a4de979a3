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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvl/argument.hpp"
#include "mvl/kernels.hpp"
#include "mvl/semantics.hpp"
#include "mvl/structure.hpp"

namespace mvl {

inline constexpr std::size_t kReductionWorldGuard = 100000;

// t_lambda for one member: 1 in dp and dc, #p in dp only, #c in dc only, 0 in neither.
std::vector<int> value_map_for(const MixedRelation& m, int value_count);

// The single mixed relation ({1, #p}, {1, #c}) over the four reduction values.
IntersectiveRelation reduction_relation();

struct ReductionResult {
  Semantics semantics;                 // over reduction_value_system()
  std::string provenance;              // "scott-suszko", "direct-scott-suszko", "tf-scott-suszko"
  std::vector<std::vector<int>> value_maps;               // per member: old value -> reduced value
  std::vector<std::pair<int, std::size_t>> origin;        // per reduced world: (member, original world)
  std::vector<std::size_t> dropped;    // reduced worlds removed in the transitive case (pre-drop indices)
  ValueSet used_values = 0;            // reduced values taken by some checked formula
  std::optional<AgreementResult> agreement;  // original vs reduced verdicts on the checked fragment
};

// Worlds: every (member, world) pair, member-major, each storing the reduced value
// of every fragment formula by its text.
ReductionResult scott_suszko(const Semantics& s, const Fragment& frag, int max_side = 2,
                             std::size_t world_guard = kReductionWorldGuard);

enum class DirectWorlds {
  all_failing,      // one world per failing pair (needs an explicit table, <= 12 formulas)
  maximal_failing,  // one world per maximal failing pair; same verdicts, fewer worlds
};

// Needs a monotone table.
Semantics direct_scott_suszko(const ArgumentTable& table, DirectWorlds mode = DirectWorlds::all_failing,
                              std::size_t world_guard = kReductionWorldGuard);

// Formulas occurring in no failing pair; the distinct-proposition guarantee needs at most one.
std::vector<int> idle_formulas(const ArgumentTable& table);
// First pair of formulas with identical values in every world, if any.
std::optional<std::pair<int, int>> shared_proposition(const Semantics& s, const std::vector<Formula>& formulas);

TruthFunction canonical_truth_function(const RegularityRules& rules, int arity, const std::string& name = "c");

// The rules of the four usual classical connectives (neg, and, or, cond).
std::map<std::string, RegularityRules> standard_rules();

struct TfOptions {
  int max_side = 2;
  std::size_t world_guard = kReductionWorldGuard;
  // Fragment on which each connective's rules are verified; default: depth <= 1 over the
  // same atoms and signature.
  std::optional<Fragment> regularity_fragment;
  bool verify_rules = true;
};

ReductionResult tf_scott_suszko(const Semantics& s, const std::map<std::string, RegularityRules>& rules,
                                const Fragment& frag, const TfOptions& options = {});

bool is_strong_kleene(const TruthFunction& tf);
bool closure_check(const TruthFunction& tf, ValueSet subset);
bool is_bivalent_closed(const TruthFunction& tf);

}  // namespace mvl
