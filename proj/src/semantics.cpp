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

#include "mvl/semantics.hpp"

#include <algorithm>
#include <set>

#include "mvl/error.hpp"

namespace mvl {

// ---------------------------------------------------------------- values

std::optional<int> ValueSystem::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels[i] == label) return i;
  return std::nullopt;
}

std::string ValueSystem::format(ValueSet s) const {
  std::string out = "{";
  bool first = true;
  for (int x : members_of(s)) {
    if (!first) out += ", ";
    first = false;
    out += x < size() ? labels[x] : "?" + std::to_string(x);
  }
  return out + "}";
}

void ValueSystem::validate() const {
  if (labels.empty()) throw DomainError("a value system needs at least one value");
  if (size() > kMaxValues) throw DomainError("too many truth values (max " + std::to_string(kMaxValues) + ")");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw DomainError("duplicate value label");
  std::set<int> designated;
  for (const auto* o : {&one, &zero, &hash_p, &hash_c}) {
    if (!*o) continue;
    if (**o < 0 || **o >= size()) throw DomainError("label designation out of range");
    if (!designated.insert(**o).second) throw DomainError("label designations must be distinct");
  }
}

ValueSystem reduction_value_system() {
  ValueSystem v;
  v.labels = {"1", "#p", "#c", "0"};
  v.one = v4::one;
  v.hash_p = v4::hash_p;
  v.hash_c = v4::hash_c;
  v.zero = v4::zero;
  return v;
}

// ---------------------------------------------------------------- truth functions

int TruthFunction::apply(const int* args) const {
  std::size_t row = 0;
  for (int i = 0; i < connective.arity; ++i) row = row * value_count + args[i];
  return table[row];
}

void TruthFunction::validate() const {
  std::size_t rows = 1;
  for (int i = 0; i < connective.arity; ++i) rows *= value_count;
  if (table.size() != rows)
    throw DomainError("truth table for '" + connective.name + "' has " + std::to_string(table.size()) +
                      " entries, expected " + std::to_string(rows));
  for (int v : table)
    if (v < 0 || v >= value_count) throw DomainError("truth table for '" + connective.name + "' leaves V");
}

std::vector<int> decode_row(std::size_t row, int arity, int value_count) {
  std::vector<int> args(arity);
  for (int i = arity - 1; i >= 0; --i) {
    args[i] = static_cast<int>(row % value_count);
    row /= value_count;
  }
  return args;
}

TruthFunction TruthFunction::from(const ConnectiveSig& c, int value_count,
                                  const std::function<int(const std::vector<int>&)>& f) {
  TruthFunction tf{c, value_count, {}};
  std::size_t rows = 1;
  for (int i = 0; i < c.arity; ++i) rows *= value_count;
  tf.table.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) tf.table[r] = f(decode_row(r, c.arity, value_count));
  tf.validate();
  return tf;
}

TruthFunction TruthFunction::constant(const ConnectiveSig& c, int value_count, int value) {
  return from(c, value_count, [value](const std::vector<int>&) { return value; });
}

// ---------------------------------------------------------------- relations

bool holds_mixed(const MixedRelation& r, ValueSet gamma, ValueSet delta, int value_count) {
  ValueSet all = full_set(value_count);
  if (!subset_of(gamma, all) || !subset_of(delta, all)) throw DomainError("value set outside V");
  if (!subset_of(r.dp, all) || !subset_of(r.dc, all)) throw DomainError("relation member outside V");
  return holds_mixed(r, gamma, delta);
}

void IntersectiveRelation::validate() const {
  if (value_count < 1 || value_count > kMaxValues) throw DomainError("relation over an invalid value count");
  ValueSet all = full_set(value_count);
  for (const auto& m : members)
    if (!subset_of(m.dp, all) || !subset_of(m.dc, all)) throw DomainError("relation member outside V");
}

bool holds_intersective(const IntersectiveRelation& r, ValueSet gamma, ValueSet delta) {
  ValueSet all = full_set(r.value_count);
  if (!subset_of(gamma, all) || !subset_of(delta, all)) throw DomainError("value set outside V");
  for (const auto& m : r.members)
    if (!holds_mixed(m, gamma, delta)) return false;
  return true;
}

RelationTable::RelationTable(int value_count, bool fill) : n_(value_count) {
  if (value_count < 0 || value_count > 12) throw GuardError("relation table over more than 12 values");
  bits_.assign(std::size_t{1} << (2 * value_count), fill ? 1 : 0);
}

void check_relation_guard(int value_count, int guard) {
  if (value_count > guard)
    throw GuardError("exhaustive check over " + std::to_string(value_count) + " values exceeds the guard of " +
                     std::to_string(guard));
}

RelationTable tabulate(const IntersectiveRelation& r, int guard) {
  r.validate();
  check_relation_guard(r.value_count, guard);
  RelationTable t(r.value_count, true);
  ValueSet all = t.all();
  for (ValueSet g = 0; g <= all; ++g)
    for (ValueSet d = 0; d <= all; ++d) {
      bool h = true;
      for (const auto& m : r.members)
        if (!holds_mixed(m, g, d)) {
          h = false;
          break;
        }
      t.set(g, d, h);
    }
  return t;
}

Classification classify_relation(const IntersectiveRelation& r) {
  Classification c;
  ValueSet all = full_set(r.value_count);
  for (const auto& m : r.members) {
    MemberClass mc;
    mc.p_mixed = subset_of(m.dp, m.dc);
    mc.q_mixed = subset_of(m.dc, m.dp);
    mc.pure = m.dp == m.dc;
    c.all_p_mixed = c.all_p_mixed && mc.p_mixed;
    c.all_q_mixed = c.all_q_mixed && mc.q_mixed;
    c.all_pure = c.all_pure && mc.pure;
    if (m.dp & m.dc) c.t_polarized = true;
    if (all & ~(m.dp | m.dc)) c.f_polarized = true;
    c.members.push_back(mc);
  }
  return c;
}

// ---------------------------------------------------------------- semantics

const TruthFunction* Semantics::truth_function(const std::string& name) const {
  auto it = truth_functions.find(name);
  return it == truth_functions.end() ? nullptr : &it->second;
}

std::vector<World> Semantics::worlds_over(const std::vector<std::string>& atoms, std::size_t guard) const {
  if (!valuational) return worlds;
  const std::size_t n = static_cast<std::size_t>(values.size());
  std::size_t count = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (count > guard / n) throw GuardError("valuation count exceeds the world guard of " + std::to_string(guard));
    count *= n;
  }
  if (count > guard) throw GuardError("valuation count exceeds the world guard of " + std::to_string(guard));
  std::vector<World> out(count);
  for (std::size_t w = 0; w < count; ++w) {
    std::size_t rest = w;
    for (std::size_t i = atoms.size(); i-- > 0;) {
      out[w].values[atoms[i]] = static_cast<int>(rest % n);
      rest /= n;
    }
  }
  return out;
}

void Semantics::validate() const {
  values.validate();
  if (relation.value_count != values.size()) throw DomainError("relation and value system disagree on |V|");
  relation.validate();
  for (const auto& [name, tf] : truth_functions) {
    if (!signature.contains(tf.connective)) throw DomainError("truth function for undeclared connective '" + name + "'");
    if (tf.value_count != values.size()) throw DomainError("truth function '" + name + "' over the wrong |V|");
    tf.validate();
  }
  for (const auto& w : worlds)
    for (const auto& [k, v] : w.values)
      if (v < 0 || v >= values.size()) throw DomainError("world value out of range for '" + k + "'");
}

namespace {

int eval_rec(const Semantics& s, const Formula& f, const World& w) {
  auto it = w.values.find(f.text());
  if (it != w.values.end()) return it->second;
  if (f.is_atom()) throw DomainError("world assigns no value to atom '" + f.atom_name() + "'");
  const TruthFunction* tf = s.truth_function(f.connective().name);
  if (!tf) throw DomainError("missing truth function for '" + f.connective().name + "'");
  std::vector<int> args;
  args.reserve(f.args().size());
  for (const auto& a : f.args()) args.push_back(eval_rec(s, a, w));
  return tf->apply(args);
}

std::vector<std::string> sorted_atoms(const std::vector<Formula>& fs) {
  std::set<std::string> atoms;
  for (const auto& f : fs) f.collect_atoms(atoms);
  return {atoms.begin(), atoms.end()};
}

}  // namespace

int evaluate(const Semantics& s, const Formula& f, const World& w) { return eval_rec(s, f, w); }

int evaluate(const Semantics& s, const Formula& f, std::size_t world_index) {
  if (s.valuational) {
    auto ws = s.worlds_over(sorted_atoms({f}));
    if (world_index >= ws.size()) throw DomainError("world index out of range");
    return eval_rec(s, f, ws[world_index]);
  }
  if (world_index >= s.worlds.size()) throw DomainError("world index out of range");
  return eval_rec(s, f, s.worlds[world_index]);
}

ValueMatrix evaluate_fragment(const Semantics& s, const Fragment& frag, std::size_t world_guard) {
  std::vector<World> ws = s.worlds_over(frag.atoms, world_guard);
  if (ws.size() > world_guard) throw GuardError("world count exceeds the guard");
  ValueMatrix m;
  m.world_count = ws.size();
  m.formula_count = frag.size();
  m.data.assign(m.world_count * m.formula_count, 0);

  // Resolve per-formula evaluation strategy once.
  std::vector<const TruthFunction*> tfs(frag.size(), nullptr);
  for (std::size_t i = 0; i < frag.size(); ++i)
    if (!frag.formulas[i].is_atom()) tfs[i] = s.truth_function(frag.formulas[i].connective().name);

  std::vector<int> args;
  for (std::size_t w = 0; w < ws.size(); ++w) {
    std::uint8_t* row = &m.data[w * m.formula_count];
    const World& world = ws[w];
    for (int i : frag.eval_order) {
      const Formula& f = frag.formulas[i];
      int v;
      auto it = world.values.find(f.text());
      if (it != world.values.end()) {
        v = it->second;
      } else if (f.is_atom()) {
        throw DomainError("world " + std::to_string(w) + " assigns no value to atom '" + f.atom_name() + "'");
      } else {
        if (!tfs[i])
          throw DomainError("missing truth function for '" + f.connective().name + "' (formula " + f.text() + ")");
        args.clear();
        for (int c : frag.children[i]) args.push_back(row[c]);
        v = tfs[i]->apply(args);
      }
      if (v < 0 || v >= s.values.size()) throw DomainError("value out of range for " + f.text());
      row[i] = static_cast<std::uint8_t>(v);
    }
  }
  return m;
}

ValueMatrix evaluate_formulas(const Semantics& s, const std::vector<Formula>& formulas, std::size_t world_guard) {
  Fragment closure = closure_fragment(formulas, std::max<std::size_t>(kDefaultFormulaGuard, formulas.size() * 8));
  ValueMatrix full = evaluate_fragment(s, closure, world_guard);
  ValueMatrix m;
  m.world_count = full.world_count;
  m.formula_count = formulas.size();
  m.data.resize(m.world_count * m.formula_count);
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    int idx = *closure.index_of(formulas[i]);
    for (std::size_t w = 0; w < m.world_count; ++w) m.data[w * m.formula_count + i] = full(w, idx);
  }
  return m;
}

bool consequence(const Semantics& s, const std::vector<Formula>& gamma, const std::vector<Formula>& delta) {
  std::vector<Formula> all(gamma);
  all.insert(all.end(), delta.begin(), delta.end());
  ValueMatrix m = evaluate_formulas(s, all);
  for (std::size_t w = 0; w < m.world_count; ++w) {
    ValueSet g = 0, d = 0;
    for (std::size_t i = 0; i < gamma.size(); ++i) g |= singleton(m(w, i));
    for (std::size_t i = 0; i < delta.size(); ++i) d |= singleton(m(w, gamma.size() + i));
    if (!holds_intersective(s.relation, g, d)) return false;
  }
  return true;
}

}  // namespace mvl
