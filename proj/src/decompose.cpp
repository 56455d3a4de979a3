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

#include "mvl/decompose.hpp"

#include <algorithm>
#include <set>

#include "mvl/argument.hpp"
#include "mvl/error.hpp"
#include "mvl/structure.hpp"

namespace mvl {

namespace {

void require(const PropertyReport& rep, const std::string& what) {
  if (!rep.holds) throw PreconditionError("relation is not " + what, rep.witness);
}

IntersectiveRelation members_from(const RelationTable& r, bool maximal_only, bool covering_only) {
  const int n = r.value_count();
  const ValueSet all = r.all();
  IntersectiveRelation out{n, {}};
  std::set<MixedRelation> seen;
  for (std::size_t idx = 0; idx < r.pair_count(); ++idx) {
    if (r.at(idx)) continue;
    const ValueSet g = static_cast<ValueSet>(idx) & all, d = static_cast<ValueSet>(idx >> n);
    if (covering_only && (g | d) != all) continue;
    if (maximal_only) {
      bool maximal = true;
      for (int x = 0; x < n && maximal; ++x) {
        if (!contains(g, x) && !r.holds(g | singleton(x), d)) maximal = false;
        if (!contains(d, x) && !r.holds(g, d | singleton(x))) maximal = false;
      }
      if (!maximal) continue;
    }
    MixedRelation m{g, all & ~d};
    if (seen.insert(m).second) out.members.push_back(m);
  }
  return out;
}

}  // namespace

IntersectiveRelation decompose_monotone(const RelationTable& r, bool maximal_only, const ValueSystem* values) {
  require(is_monotonic(r, values), "monotonic");
  return members_from(r, maximal_only, false);
}

IntersectiveRelation decompose_reflexive(const RelationTable& r, const ValueSystem* values) {
  require(is_monotonic(r, values), "monotonic");
  require(is_reflexive(r, values), "reflexive");
  return members_from(r, true, false);
}

IntersectiveRelation decompose_transitive(const RelationTable& r, const ValueSystem* values) {
  require(is_monotonic(r, values), "monotonic");
  require(is_value_transitive(r, values), "transitive");
  return members_from(r, false, true);
}

IntersectiveRelation decompose_tarskian(const RelationTable& r, const ValueSystem* values) {
  require(is_monotonic(r, values), "monotonic");
  require(is_reflexive(r, values), "reflexive");
  require(is_value_transitive(r, values), "transitive");
  return members_from(r, true, true);
}

IntersectiveRelation minimize_intersection(const IntersectiveRelation& r) {
  std::vector<MixedRelation> ms = r.members;
  std::sort(ms.begin(), ms.end());
  // Member (dp, dc) fails exactly under its single box (dp, V \ dc); it is redundant
  // when another member's box contains that one: dp within dp' and dc' within dc.
  std::vector<bool> alive(ms.size(), true);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j)
      if (i != j && alive[j] && subset_of(ms[i].dp, ms[j].dp) && subset_of(ms[j].dc, ms[i].dc)) {
        alive[i] = false;
        break;
      }
  IntersectiveRelation out{r.value_count, {}};
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (alive[i]) out.members.push_back(ms[i]);
  return out;
}

IntersectiveRelation minimize_for_fragment(const Semantics& s, const std::vector<Formula>& formulas) {
  Semantics cur = s;
  std::sort(cur.relation.members.begin(), cur.relation.members.end());
  const auto target = table_from_semantics(cur, formulas).maximal_failing();
  for (std::size_t i = 0; i < cur.relation.members.size();) {
    Semantics trial = cur;
    trial.relation.members.erase(trial.relation.members.begin() + static_cast<long>(i));
    if (table_from_semantics(trial, formulas).maximal_failing() == target)
      cur = std::move(trial);
    else
      ++i;
  }
  return cur.relation;
}

}  // namespace mvl
