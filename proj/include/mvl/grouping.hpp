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

#include <vector>

#include "mvl/semantics.hpp"
#include "mvl/structure.hpp"

namespace mvl {

inline constexpr int kGroupingGuard = 8;

using Partition = std::vector<std::vector<int>>;  // classes ordered by least member

// Surjection V1 -> V2 with the least-index right inverse.
struct GroupingMap {
  int source_count = 0;
  int target_count = 0;
  std::vector<int> map;             // source -> target
  std::vector<int> representative;  // target -> least source

  static GroupingMap from_map(std::vector<int> map);       // targets must be 0..k-1, all hit
  static GroupingMap from_partition(const Partition& p, int source_count);
  static GroupingMap identity(int n);
  ValueSet image(ValueSet s) const;
  Partition partition() const;
};

// x ~ y iff adding x or y to either side never changes a verdict.
Partition canonical_equivalence(const RelationTable& r, int guard = kGroupingGuard);

// Equal images on both sides force equal verdicts. Witness sets: gamma, delta, gamma', delta'.
PropertyReport is_relation_g_reduction(const RelationTable& r, const GroupingMap& rho, int guard = kGroupingGuard);
PropertyReport is_c_g_reduction(const TruthFunction& tf, const GroupingMap& rho);

// Needs rho to pass both checks (relation and every truth function); target labels are
// the representatives' labels.
Semantics quotient_semantics(const Semantics& s, const GroupingMap& rho);

// Finite cut of the infinite-value example where equivalent values cannot be merged:
// values {1, 0, h1..hm}, members (D, {1}) for D within V \ {0} holding at most m - 1 of the h's.
// Each cut keeps the h's apart (only m of them together entail 0); they become
// equivalent only in the infinite limit.
Semantics truncated_hash_semantics(int m);

}  // namespace mvl
