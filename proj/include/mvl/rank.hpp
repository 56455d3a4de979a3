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
#include "mvl/structure.hpp"

namespace mvl {

struct StructuralProfile {
  bool monotone = true;
  bool reflexive = false;
  bool transitive = false;
  bool permeable = false;
};

// 2 if reflexive and transitive, 3 if exactly one, 4 if neither. Needs monotone, non-permeable.
int classify_rank(const StructuralProfile& p);

enum class LowerBoundProof { exhausted_search, constraint_table };

struct RankCertificate {
  std::optional<int> rank;             // empty when no semantics exists within the bounds
  std::optional<Semantics> witness;    // reproduces the table, exactly `rank` values
  LowerBoundProof proof = LowerBoundProof::exhausted_search;
  int lower_bound = 1;                 // every value count below this was refuted
  int members = 1;                     // members of the relation searched (1 = mixed rank)
  std::vector<std::uint64_t> refutations;  // [k - 1]: candidates refuted with k values
  std::vector<std::string> steps;      // readable derivation
};

inline constexpr std::size_t kRankFormulaLimit = 6;
inline constexpr std::uint64_t kRankSearchGuard = 50000000;

// Exhaustive search for a sound and complete semantics whose relation is an intersection of
// `members` mixed relations, over 1..max_values values and up to max_worlds worlds.
// Order: values, then worlds, then value shapes canonically, then worlds by depth-first cover.
RankCertificate brute_force_rank(const ArgumentTable& table, int max_values, int max_worlds, int members = 1,
                                 std::uint64_t guard = kRankSearchGuard);
RankCertificate brute_force_mixed_rank(const ArgumentTable& table, int max_values = 4, int max_worlds = 64);

// Lower bound from single-formula verdicts: each verdict forces value properties, and
// values with clashing properties must differ. Bound = largest pairwise-clashing family.
RankCertificate constraint_lower_bound(const ArgumentTable& table);

// Truth-functional search: every truth function for the fragment's connectives over k values,
// every set of valuations as worlds, and the least monotone relation the valid arguments force.
struct TruthAdequateResult {
  int values = 0;
  std::optional<Semantics> witness;
  std::uint64_t candidates = 0;         // (truth functions, world set) pairs examined
  std::vector<std::string> trace;       // staged refutation, for two values
};

inline constexpr std::uint64_t kTruthAdequateGuard = 20000000;

TruthAdequateResult search_truth_adequate(const Semantics& s, const Fragment& frag, int k, int max_side = 2,
                                          std::uint64_t guard = kTruthAdequateGuard);

// Two values: enumerates the monotone relations over {0,1} literally, then stages the refutation:
// constants only, then single-formula arguments of depth <= 1, then the rest.
PropertyReport no_bivalent_tf_semantics(const Semantics& s, const Fragment& frag, int max_side = 2);

// Least k <= max_values admitting a truth-adequate semantics, refuting every smaller k.
RankCertificate truth_functional_rank(const Semantics& s, const Fragment& frag, int max_values, int max_side = 2);

}  // namespace mvl
