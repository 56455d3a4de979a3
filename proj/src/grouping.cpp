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

#include "mvl/grouping.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mvl/error.hpp"

namespace mvl {

GroupingMap GroupingMap::from_map(std::vector<int> map) {
  GroupingMap g;
  g.source_count = static_cast<int>(map.size());
  int k = 0;
  for (int t : map) {
    if (t < 0) throw DomainError("grouping map has a negative target");
    k = std::max(k, t + 1);
  }
  g.target_count = k;
  g.representative.assign(k, -1);
  for (int x = 0; x < g.source_count; ++x)
    if (g.representative[map[x]] < 0) g.representative[map[x]] = x;
  for (int t = 0; t < k; ++t)
    if (g.representative[t] < 0) throw DomainError("grouping map is not surjective onto 0.." + std::to_string(k - 1));
  g.map = std::move(map);
  return g;
}

GroupingMap GroupingMap::from_partition(const Partition& p, int source_count) {
  std::vector<int> map(source_count, -1);
  for (std::size_t c = 0; c < p.size(); ++c)
    for (int x : p[c]) {
      if (x < 0 || x >= source_count || map[x] >= 0) throw DomainError("not a partition of the values");
      map[x] = static_cast<int>(c);
    }
  if (std::find(map.begin(), map.end(), -1) != map.end()) throw DomainError("partition misses a value");
  return from_map(std::move(map));
}

GroupingMap GroupingMap::identity(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return from_map(std::move(m));
}

ValueSet GroupingMap::image(ValueSet s) const {
  ValueSet out = 0;
  for (int x : members_of(s)) out |= singleton(map.at(x));
  return out;
}

Partition GroupingMap::partition() const {
  Partition p(target_count);
  for (int x = 0; x < source_count; ++x) p[map[x]].push_back(x);
  std::sort(p.begin(), p.end());
  return p;
}

Partition canonical_equivalence(const RelationTable& r, int guard) {
  const int n = r.value_count();
  check_relation_guard(n, guard);
  const ValueSet all = r.all();
  auto equivalent = [&](int x, int y) {
    for (ValueSet g = 0; g <= all; ++g)
      for (ValueSet d = 0; d <= all; ++d) {
        if (r.holds(g | singleton(x), d) != r.holds(g | singleton(y), d)) return false;
        if (r.holds(g, d | singleton(x)) != r.holds(g, d | singleton(y))) return false;
      }
    return true;
  };
  Partition p;
  std::vector<bool> placed(n, false);
  for (int x = 0; x < n; ++x) {
    if (placed[x]) continue;
    p.push_back({x});
    placed[x] = true;
    for (int y = x + 1; y < n; ++y)
      if (!placed[y] && equivalent(x, y)) {
        p.back().push_back(y);
        placed[y] = true;
      }
  }
  return p;
}

PropertyReport is_relation_g_reduction(const RelationTable& r, const GroupingMap& rho, int guard) {
  const int n = r.value_count();
  check_relation_guard(n, guard);
  if (rho.source_count != n) throw DomainError("grouping map and relation disagree on |V|");
  PropertyReport rep{"relation-g-reduction", true, {}, {}, {}, false};
  const ValueSet all = r.all();
  std::map<std::pair<ValueSet, ValueSet>, std::pair<ValueSet, ValueSet>> first;
  for (ValueSet d = 0; d <= all; ++d)
    for (ValueSet g = 0; g <= all; ++g) {
      auto key = std::make_pair(rho.image(g), rho.image(d));
      auto [it, fresh] = first.emplace(key, std::make_pair(g, d));
      if (fresh) continue;
      const auto [g0, d0] = it->second;
      if (r.holds(g0, d0) != r.holds(g, d)) {
        rep.holds = false;
        rep.value_witness = {g0, d0, g, d};
        auto fmt = [](ValueSet s) {
          std::string o = "{";
          for (int x : members_of(s)) o += (o.size() > 1 ? ", " : "") + std::to_string(x);
          return o + "}";
        };
        rep.witness = {fmt(g0) + (r.holds(g0, d0) ? " |= " : " |/= ") + fmt(d0),
                       fmt(g) + (r.holds(g, d) ? " |= " : " |/= ") + fmt(d), "both pairs have the same image"};
        return rep;
      }
    }
  return rep;
}

PropertyReport is_c_g_reduction(const TruthFunction& tf, const GroupingMap& rho) {
  if (rho.source_count != tf.value_count) throw DomainError("grouping map and truth function disagree on |V|");
  PropertyReport rep{"c-g-reduction(" + tf.connective.name + ")", true, {}, {}, {}, false};
  std::map<std::vector<int>, std::size_t> first;
  for (std::size_t row = 0; row < tf.row_count(); ++row) {
    auto args = decode_row(row, tf.connective.arity, tf.value_count);
    std::vector<int> img;
    for (int a : args) img.push_back(rho.map[a]);
    auto [it, fresh] = first.emplace(img, row);
    if (fresh) continue;
    if (rho.map[tf.table[it->second]] != rho.map[tf.table[row]]) {
      rep.holds = false;
      auto show = [&](std::size_t rw) {
        auto a = decode_row(rw, tf.connective.arity, tf.value_count);
        std::string s = tf.connective.name + "(";
        for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + std::to_string(a[i]);
        return s + ") = " + std::to_string(tf.table[rw]);
      };
      rep.witness = {show(it->second), show(row), "arguments share an image, results do not"};
      return rep;
    }
  }
  return rep;
}

Semantics quotient_semantics(const Semantics& s, const GroupingMap& rho) {
  s.validate();
  if (rho.source_count != s.values.size()) throw DomainError("grouping map and semantics disagree on |V|");
  auto rel = is_relation_g_reduction(tabulate(s.relation), rho, kGroupingGuard);
  if (!rel.holds) throw PreconditionError("not a relation-g-reduction", rel.witness);
  for (const auto& [name, tf] : s.truth_functions) {
    auto c = is_c_g_reduction(tf, rho);
    if (!c.holds) throw PreconditionError("not a g-reduction for '" + name + "'", c.witness);
  }
  Semantics q;
  for (int t = 0; t < rho.target_count; ++t) q.values.labels.push_back(s.values.labels[rho.representative[t]]);
  // Keep a designation only when no other designated value lands in the same class.
  std::vector<std::optional<int>*> qd = {&q.values.one, &q.values.zero, &q.values.hash_p, &q.values.hash_c};
  std::vector<const std::optional<int>*> sd = {&s.values.one, &s.values.zero, &s.values.hash_p, &s.values.hash_c};
  for (std::size_t i = 0; i < sd.size(); ++i) {
    if (!*sd[i]) continue;
    bool clash = false;
    for (std::size_t j = 0; j < sd.size(); ++j)
      if (j != i && *sd[j] && rho.map[**sd[j]] == rho.map[**sd[i]]) clash = true;
    if (!clash) *qd[i] = rho.map[**sd[i]];
  }
  q.signature = s.signature;
  q.relation.value_count = rho.target_count;
  std::set<MixedRelation> seen;
  for (const auto& m : s.relation.members) {
    MixedRelation qm{rho.image(m.dp), rho.image(m.dc)};
    if (seen.insert(qm).second) q.relation.members.push_back(qm);
  }
  for (const auto& [name, tf] : s.truth_functions) {
    q.truth_functions.emplace(name, TruthFunction::from(tf.connective, rho.target_count, [&](const std::vector<int>& y) {
      std::vector<int> x;
      for (int v : y) x.push_back(rho.representative[v]);
      return rho.map[tf.apply(x)];
    }));
  }
  q.valuational = s.valuational;
  for (const auto& w : s.worlds) {
    World qw;
    for (const auto& [k, v] : w.values) qw.values[k] = rho.map[v];
    q.worlds.push_back(std::move(qw));
  }
  return q;
}

Semantics truncated_hash_semantics(int m) {
  if (m < 1 || m > 6) throw DomainError("hash truncation needs 1 <= m <= 6");
  Semantics s;
  s.values.labels = {"1", "0"};
  for (int i = 1; i <= m; ++i) s.values.labels.push_back("h" + std::to_string(i));
  s.values.one = 0;
  s.values.zero = 1;
  const int n = m + 2;
  s.relation.value_count = n;
  const ValueSet hashes = full_set(n) & ~ValueSet{3};
  for (ValueSet d = 0; d <= full_set(n); ++d) {
    if (contains(d, 1)) continue;
    if (popcount(d & hashes) > m - 1) continue;
    s.relation.members.push_back(MixedRelation{d, singleton(0)});
  }
  s.valuational = false;
  return s;
}

}  // namespace mvl
