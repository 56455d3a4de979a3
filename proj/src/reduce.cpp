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

#include "mvl/reduce.hpp"

#include <algorithm>
#include <set>

#include "mvl/error.hpp"

namespace mvl {

std::vector<int> value_map_for(const MixedRelation& m, int value_count) {
  std::vector<int> t(value_count);
  for (int x = 0; x < value_count; ++x) {
    const bool p = contains(m.dp, x), c = contains(m.dc, x);
    t[x] = p && c ? v4::one : p ? v4::hash_p : c ? v4::hash_c : v4::zero;
  }
  return t;
}

IntersectiveRelation reduction_relation() {
  return IntersectiveRelation{
      4, {MixedRelation{singleton(v4::one) | singleton(v4::hash_p), singleton(v4::one) | singleton(v4::hash_c)}}};
}

namespace {

ValueSet used_in(const ValueMatrix& m) {
  ValueSet u = 0;
  for (auto v : m.data) u |= singleton(v);
  return u;
}

void collect_signature(const Formula& f, Signature& sig) {
  if (f.is_atom()) return;
  if (!sig.contains(f.connective())) sig.add(f.connective());
  for (const auto& a : f.args()) collect_signature(a, sig);
}

Semantics reduced_shell(const Signature& sig) {
  Semantics r;
  r.values = reduction_value_system();
  r.signature = sig;
  r.relation = reduction_relation();
  r.valuational = false;
  return r;
}

void check_world_count(std::size_t members, std::size_t worlds, std::size_t guard) {
  if (worlds != 0 && members > guard / worlds)
    throw GuardError("reduction would need " + std::to_string(members) + " x " + std::to_string(worlds) +
                     " worlds, above the guard of " + std::to_string(guard));
}

}  // namespace

ReductionResult scott_suszko(const Semantics& s, const Fragment& frag, int max_side, std::size_t world_guard) {
  s.relation.validate();
  const ValueMatrix orig = evaluate_fragment(s, frag);
  const std::size_t members = s.relation.members.size();
  check_world_count(members, orig.world_count, world_guard);

  ReductionResult res;
  res.provenance = "scott-suszko";
  res.semantics = reduced_shell(s.signature);
  for (const auto& m : s.relation.members) res.value_maps.push_back(value_map_for(m, s.values.size()));
  for (std::size_t l = 0; l < members; ++l)
    for (std::size_t w = 0; w < orig.world_count; ++w) {
      World world;
      for (std::size_t i = 0; i < frag.size(); ++i) world.values[frag.formulas[i].text()] = res.value_maps[l][orig(w, i)];
      res.semantics.worlds.push_back(std::move(world));
      res.origin.emplace_back(static_cast<int>(l), w);
    }
  const ValueMatrix red = evaluate_fragment(res.semantics, frag);
  res.used_values = used_in(red);
  res.agreement = compare_verdicts(BoxModel::from_values(orig, s.relation),
                                   BoxModel::from_values(red, res.semantics.relation), max_side);
  return res;
}

Semantics direct_scott_suszko(const ArgumentTable& table, DirectWorlds mode, std::size_t world_guard) {
  if (!table.is_monotone()) throw PreconditionError("table is not monotonic", is_monotonic(table).witness);
  const auto& fs = table.formulas();
  Signature sig;
  for (const auto& f : fs) collect_signature(f, sig);
  Semantics out = reduced_shell(sig);

  auto add_world = [&](auto in_gamma, auto in_delta) {
    if (out.worlds.size() >= world_guard)
      throw GuardError("direct construction exceeds the world guard of " + std::to_string(world_guard));
    World w;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const bool g = in_gamma(i), d = in_delta(i);
      w.values[fs[i].text()] = g && !d ? v4::one : !g && d ? v4::zero : g ? v4::hash_p : v4::hash_c;
    }
    out.worlds.push_back(std::move(w));
  };

  if (mode == DirectWorlds::maximal_failing) {
    for (const auto& b : table.maximal_failing())
      add_world([&](std::size_t i) { return b.p.test(i); }, [&](std::size_t i) { return b.n.test(i); });
    return out;
  }
  const auto verdicts = table.materialize();
  const std::size_t n = fs.size();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::size_t idx = 0; idx < verdicts.size(); ++idx) {
    if (verdicts[idx]) continue;
    const std::uint64_t g = idx & full, d = idx >> n;
    add_world([&](std::size_t i) { return ((g >> i) & 1u) != 0; }, [&](std::size_t i) { return ((d >> i) & 1u) != 0; });
  }
  return out;
}

std::vector<int> idle_formulas(const ArgumentTable& table) {
  BitSet used(table.size());
  for (const auto& b : table.maximal_failing()) {
    used |= b.p;
    used |= b.n;
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (!used.test(i)) out.push_back(static_cast<int>(i));
  return out;
}

std::optional<std::pair<int, int>> shared_proposition(const Semantics& s, const std::vector<Formula>& formulas) {
  const ValueMatrix m = evaluate_formulas(s, formulas);
  for (std::size_t i = 0; i < formulas.size(); ++i)
    for (std::size_t j = i + 1; j < formulas.size(); ++j) {
      bool same = true;
      for (std::size_t w = 0; w < m.world_count && same; ++w) same = m(w, i) == m(w, j);
      if (same) return std::make_pair(static_cast<int>(i), static_cast<int>(j));
    }
  return std::nullopt;
}

TruthFunction canonical_truth_function(const RegularityRules& rules, int arity, const std::string& name) {
  if (arity < 0 || arity > 8) throw DomainError("canonical truth functions need 0 <= arity <= 8");
  validate_rules(rules, arity);
  const ValueSet des_p = singleton(v4::one) | singleton(v4::hash_p);
  const ValueSet des_c = singleton(v4::one) | singleton(v4::hash_c);
  auto conj = [&](const std::vector<RegularityRule>& rs, const std::vector<int>& x) {
    for (const auto& r : rs) {
      bool prem = true, conc = false;
      for (int i = 0; i < arity; ++i) {
        if (((r.bp >> i) & 1u) && !contains(des_p, x[i])) prem = false;
        if (((r.bc >> i) & 1u) && contains(des_c, x[i])) conc = true;
      }
      if (prem && !conc) return false;
    }
    return true;
  };
  return TruthFunction::from(ConnectiveSig{name, arity}, 4, [&](const std::vector<int>& x) {
    const bool in_p = !conj(rules.premise_rules, x);
    const bool in_c = conj(rules.conclusion_rules, x);
    return in_p && in_c ? v4::one : in_p ? v4::hash_p : in_c ? v4::hash_c : v4::zero;
  });
}

std::map<std::string, RegularityRules> standard_rules() {
  // Position bits: 1 = first argument, 2 = second.
  return {
      {"neg", {{{0, 1}}, {{1, 0}}}},
      {"and", {{{3, 0}}, {{0, 1}, {0, 2}}}},
      {"or", {{{1, 0}, {2, 0}}, {{0, 3}}}},
      {"cond", {{{2, 0}, {0, 1}}, {{1, 2}}}},
  };
}

ReductionResult tf_scott_suszko(const Semantics& s, const std::map<std::string, RegularityRules>& rules,
                                const Fragment& frag, const TfOptions& options) {
  s.relation.validate();
  const Fragment reg_frag = options.regularity_fragment
                                ? *options.regularity_fragment
                                : generate_fragment(frag.atoms, frag.signature, std::min(1, frag.depth));

  ReductionResult res;
  res.provenance = "tf-scott-suszko";
  res.semantics = reduced_shell(s.signature);
  for (const auto& c : frag.signature.connectives()) {
    auto it = rules.find(c.name);
    if (it == rules.end()) throw PreconditionError("no regularity rules given for '" + c.name + "'");
    if (options.verify_rules) {
      auto rep = verify_regularity(s, c, it->second, reg_frag);
      if (!rep.holds) throw PreconditionError("'" + c.name + "' is not regular under the given rules", rep.witness);
    }
    res.semantics.truth_functions.emplace(c.name, canonical_truth_function(it->second, c.arity, c.name));
  }

  const ValueMatrix orig = evaluate_fragment(s, frag);
  const std::size_t members = s.relation.members.size();
  check_world_count(members, orig.world_count, options.world_guard);
  for (const auto& m : s.relation.members) res.value_maps.push_back(value_map_for(m, s.values.size()));
  std::vector<int> atom_index;
  for (const auto& a : frag.atoms) atom_index.push_back(*frag.index_of(Formula::atom(a)));
  for (std::size_t l = 0; l < members; ++l)
    for (std::size_t w = 0; w < orig.world_count; ++w) {
      World world;
      for (std::size_t k = 0; k < frag.atoms.size(); ++k)
        world.values[frag.atoms[k]] = res.value_maps[l][orig(w, atom_index[k])];
      res.semantics.worlds.push_back(std::move(world));
      res.origin.emplace_back(static_cast<int>(l), w);
    }

  const BoxModel base = BoxModel::from_values(orig, s.relation);
  ValueMatrix red = evaluate_fragment(res.semantics, frag);
  res.used_values = used_in(red);

  const bool q_mixed = std::all_of(s.relation.members.begin(), s.relation.members.end(),
                                   [](const MixedRelation& m) { return subset_of(m.dc, m.dp); });
  if (q_mixed && contains(res.used_values, v4::hash_c)) {
    // Drop the worlds generating #c, but only if no verdict depends on them.
    Semantics pruned = res.semantics;
    pruned.worlds.clear();
    std::vector<std::pair<int, std::size_t>> origin;
    for (std::size_t w = 0; w < red.world_count; ++w) {
      bool hash_c = false;
      for (std::size_t i = 0; i < red.formula_count && !hash_c; ++i) hash_c = red(w, i) == v4::hash_c;
      if (hash_c) {
        res.dropped.push_back(w);
      } else {
        pruned.worlds.push_back(res.semantics.worlds[w]);
        origin.push_back(res.origin[w]);
      }
    }
    const ValueMatrix red2 = evaluate_fragment(pruned, frag);
    auto check = compare_verdicts(base, BoxModel::from_values(red2, pruned.relation), options.max_side);
    if (!check.agree())
      throw PreconditionError("dropping the worlds that generate #c changes verdicts",
                              {format_argument(*check.first, frag.formulas, true)});
    res.semantics = std::move(pruned);
    res.origin = std::move(origin);
    red = red2;
    res.used_values = used_in(red);
  }
  res.agreement = compare_verdicts(base, BoxModel::from_values(red, res.semantics.relation), options.max_side);
  return res;
}

bool is_strong_kleene(const TruthFunction& tf) {
  if (tf.value_count != 4) throw DomainError("Strong Kleene check needs the four reduction values");
  const int n = tf.connective.arity;
  std::vector<int> x(n);
  for (int k = 0; k < n; ++k)
    for (std::uint32_t ctx = 0; ctx < (1u << n); ++ctx) {
      if ((ctx >> k) & 1u) continue;  // bit k of the context is unused
      for (int i = 0; i < n; ++i) x[i] = ((ctx >> i) & 1u) ? v4::one : v4::zero;
      x[k] = v4::zero;
      const int at0 = tf.apply(x);
      x[k] = v4::one;
      if (tf.apply(x) != at0) continue;
      for (int a = 0; a < 4; ++a) {
        x[k] = a;
        if (tf.apply(x) != at0) return false;
      }
    }
  return true;
}

bool closure_check(const TruthFunction& tf, ValueSet subset) {
  if (!subset_of(subset, full_set(tf.value_count))) throw DomainError("closure subset leaves V");
  for (std::size_t row = 0; row < tf.row_count(); ++row) {
    auto args = decode_row(row, tf.connective.arity, tf.value_count);
    if (std::all_of(args.begin(), args.end(), [&](int a) { return contains(subset, a); }) &&
        !contains(subset, tf.table[row]))
      return false;
  }
  return true;
}

bool is_bivalent_closed(const TruthFunction& tf) {
  if (tf.value_count != 4) throw DomainError("bivalent closure is defined over the four reduction values");
  return closure_check(tf, singleton(v4::one) | singleton(v4::zero));
}

}  // namespace mvl
