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

#include <string>
#include <vector>

#include "mvl/formula.hpp"
#include "mvl/semantics.hpp"

namespace mvl {

// Every decomposition has one member (gamma, V \ delta) per failing pair (gamma, delta)
// of r, deduplicated, in increasing pair index. They differ in the precondition checked,
// and hence in the member shape guaranteed.

// Monotone r. maximal_only restricts to the maximal failing pairs (same extension).
IntersectiveRelation decompose_monotone(const RelationTable& r, bool maximal_only = true,
                                        const ValueSystem* values = nullptr);
// Monotone and reflexive: every member has dp within dc.
IntersectiveRelation decompose_reflexive(const RelationTable& r, const ValueSystem* values = nullptr);
// Monotone and value-transitive: members come from failing pairs covering V, dc within dp.
IntersectiveRelation decompose_transitive(const RelationTable& r, const ValueSystem* values = nullptr);
// Monotone, reflexive and value-transitive: every member has dp == dc.
IntersectiveRelation decompose_tarskian(const RelationTable& r, const ValueSystem* values = nullptr);

// Sorts members by (dp, dc), then drops, in that order, every member whose failing
// pairs are already failing in another remaining member. Extension is unchanged.
IntersectiveRelation minimize_intersection(const IntersectiveRelation& r);

// Drops members, in (dp, dc) order, whenever the verdicts over `formulas` stay the same.
// Unlike minimize_intersection this may change the truth-level extension.
IntersectiveRelation minimize_for_fragment(const Semantics& s, const std::vector<Formula>& formulas);

}  // namespace mvl
