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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvl/argument.hpp"
#include "mvl/formula.hpp"
#include "mvl/semantics.hpp"

namespace mvl {

struct PropertyReport {
  std::string property;
  bool holds = true;
  std::vector<std::string> witness;     // readable lines, canonical order
  std::vector<ValueSet> value_witness;  // truth-level witness sets, in the order the checker names them
  std::vector<PropertyReport> parts;    // sub-verdicts (permeability directions)
  bool fragment_relative = false;       // verdict only covers the checked fragment
};

// ---- truth level: exhaustive over P(V)^2, |V| <= guard.
// `values` only supplies labels for the witness text.

// gamma1 <= gamma2, delta1 <= delta2, r(gamma1, delta1) => r(gamma2, delta2).
// Witness sets: gamma1, delta1, gamma2, delta2.
PropertyReport is_monotonic(const RelationTable& r, const ValueSystem* values = nullptr, int guard = kRelationGuard);
// {x} r {x} for every x. Witness: {x}.
PropertyReport is_reflexive(const RelationTable& r, const ValueSystem* values = nullptr, int guard = kRelationGuard);
// Every failing (gamma, delta) extends to a failing pair covering V. Witness: gamma, delta.
PropertyReport is_value_transitive(const RelationTable& r, const ValueSystem* values = nullptr,
                                   int guard = kRelationGuard);
// Cut on single values: gamma r delta+x and gamma+x r delta imply gamma r delta. Witness: gamma, delta, {x}.
PropertyReport is_cut_transitive(const RelationTable& r, const ValueSystem* values = nullptr,
                                 int guard = kRelationGuard);
// Holds iff either direction holds; parts[0] = left-to-right, parts[1] = right-to-left.
// Witness sets per failing direction: gamma, delta, sigma.
PropertyReport is_permeable(const RelationTable& r, const ValueSystem* values = nullptr, int guard = kRelationGuard);

// ---- fragment level over an ArgumentTable.
PropertyReport is_monotonic(const ArgumentTable& t);
PropertyReport is_reflexive(const ArgumentTable& t);
// Strong form: every failing pair extends to a failing pair covering the formula list. Fragment-relative.
PropertyReport is_transitive(const ArgumentTable& t);
// Ordinary cut with a single cut formula. Fragment-relative.
PropertyReport is_cut_transitive(const ArgumentTable& t);
PropertyReport is_permeable(const ArgumentTable& t);

// Gamma |- Delta implies Gamma[s] |- Delta[s] for arguments with <= 2 formulas per side
// and every substitution mapping each atom to a formula of depth <= subst_depth.
PropertyReport check_substitution_invariance(const Semantics& s, const Fragment& frag, int subst_depth,
                                             std::size_t guard = kDefaultFormulaGuard);

// ---- regularity

// Argument positions as bits: bit i is position i + 1.
struct RegularityRule {
  std::uint32_t bp = 0;
  std::uint32_t bc = 0;
  friend bool operator==(const RegularityRule&, const RegularityRule&) = default;
  friend auto operator<=>(const RegularityRule&, const RegularityRule&) = default;
};

struct RegularityRules {
  std::vector<RegularityRule> premise_rules;
  std::vector<RegularityRule> conclusion_rules;
  friend bool operator==(const RegularityRules&, const RegularityRules&) = default;
};

// bp | bc << arity
inline std::uint32_t rule_index(const RegularityRule& r, int arity) { return r.bp | (r.bc << arity); }
inline RegularityRule rule_from_index(std::uint32_t idx, int arity) {
  return {idx & ((1u << arity) - 1), idx >> arity};
}
std::string format_rule(const RegularityRule& r);
std::string format_rules(const std::vector<RegularityRule>& rs);
void validate_rules(const RegularityRules& rules, int arity);

inline constexpr int kMaxRegularityArity = 2;

PropertyReport verify_regularity(const Semantics& s, const ConnectiveSig& c, const RegularityRules& rules,
                                 const Fragment& frag);

enum class RegularitySearch {
  minimal,    // fewest rules, then lexicographic on sorted rule indices
  canonical,  // union of every rule sound on its own; valid iff any rule set is
};

std::optional<RegularityRules> search_regularity(const Semantics& s, const ConnectiveSig& c, const Fragment& frag,
                                                 RegularitySearch mode = RegularitySearch::minimal);

}  // namespace mvl
