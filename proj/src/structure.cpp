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

#include "mvl/structure.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "mvl/error.hpp"
#include "mvl/kernels.hpp"

namespace mvl {

namespace {

using Fmt = std::function<std::string(std::uint64_t)>;
using Verdict = std::function<bool(std::uint64_t, std::uint64_t)>;

Fmt value_formatter(const ValueSystem* values) {
  return [values](std::uint64_t s) {
    if (values) return values->format(static_cast<ValueSet>(s));
    std::string out = "{";
    bool first = true;
    for (int x : members_of(static_cast<ValueSet>(s))) {
      out += (first ? "" : ", ") + std::to_string(x);
      first = false;
    }
    return out + "}";
  };
}

Fmt formula_formatter(const std::vector<Formula>& fs) {
  return [&fs](std::uint64_t s) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < fs.size() && i < 64; ++i)
      if ((s >> i) & 1u) {
        out += (first ? "" : ", ") + fs[i].text();
        first = false;
      }
    return out + "}";
  };
}

std::string formula_set(const std::vector<Formula>& fs, const BitSet& b) {
  std::string out = "{";
  bool first = true;
  for (auto i : b.indices()) {
    out += (first ? "" : ", ") + fs[i].text();
    first = false;
  }
  return out + "}";
}

std::string verdict_line(const std::string& g, const std::string& d, bool holds) {
  return g + (holds ? " |= " : " |/= ") + d;
}

// ---- generic exhaustive checks over a verdict map on n-bit sets

PropertyReport monotone_check(int n, const Verdict& h, const Fmt& fmt) {
  PropertyReport r{"monotonic", true, {}, {}, {}, false};
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  // Single-element steps generate the subset order, premise side first.
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (2 * n)); ++idx) {
    std::uint64_t g = idx & full, d = idx >> n;
    if (!h(g, d)) continue;
    for (int side = 0; side < 2; ++side)
      for (int x = 0; x < n; ++x) {
        std::uint64_t bit = std::uint64_t{1} << x;
        std::uint64_t g2 = g, d2 = d;
        if (side == 0) {
          if (g & bit) continue;
          g2 |= bit;
        } else {
          if (d & bit) continue;
          d2 |= bit;
        }
        if (!h(g2, d2)) {
          r.holds = false;
          r.value_witness = {static_cast<ValueSet>(g), static_cast<ValueSet>(d), static_cast<ValueSet>(g2),
                             static_cast<ValueSet>(d2)};
          r.witness = {verdict_line(fmt(g), fmt(d), true), verdict_line(fmt(g2), fmt(d2), false)};
          return r;
        }
      }
  }
  return r;
}

PropertyReport reflexive_check(int n, const Verdict& h, const Fmt& fmt) {
  PropertyReport r{"reflexive", true, {}, {}, {}, false};
  for (int x = 0; x < n; ++x) {
    std::uint64_t s = std::uint64_t{1} << x;
    if (!h(s, s)) {
      r.holds = false;
      r.value_witness = {static_cast<ValueSet>(s)};
      r.witness = {verdict_line(fmt(s), fmt(s), false)};
      return r;
    }
  }
  return r;
}

PropertyReport strong_transitive_check(int n, const Verdict& h, const Fmt& fmt) {
  PropertyReport r{"transitive", true, {}, {}, {}, false};
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const std::size_t pairs = std::size_t{1} << (2 * n);
  // cover[idx]: some failing pair at or above idx covers everything.
  std::vector<std::uint8_t> cover(pairs, 0);
  for (std::size_t idx = pairs; idx-- > 0;) {
    std::uint64_t g = idx & full, d = idx >> n;
    bool any = ((g | d) == full) && !h(g, d);
    for (int x = 0; x < n && !any; ++x) {
      std::uint64_t bit = std::uint64_t{1} << x;
      if (!(g & bit) && cover[(g | bit) | (d << n)]) any = true;
      if (!(d & bit) && cover[g | ((d | bit) << n)]) any = true;
    }
    cover[idx] = any;
  }
  for (std::size_t idx = 0; idx < pairs; ++idx) {
    std::uint64_t g = idx & full, d = idx >> n;
    if (!h(g, d) && !cover[idx]) {
      r.holds = false;
      r.value_witness = {static_cast<ValueSet>(g), static_cast<ValueSet>(d)};
      r.witness = {verdict_line(fmt(g), fmt(d), false), "no failing extension covers every item"};
      return r;
    }
  }
  return r;
}

PropertyReport cut_check(int n, const Verdict& h, const Fmt& fmt) {
  PropertyReport r{"cut", true, {}, {}, {}, false};
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (2 * n)); ++idx) {
    std::uint64_t g = idx & full, d = idx >> n;
    if (h(g, d)) continue;
    for (int x = 0; x < n; ++x) {
      std::uint64_t bit = std::uint64_t{1} << x;
      if (h(g, d | bit) && h(g | bit, d)) {
        r.holds = false;
        r.value_witness = {static_cast<ValueSet>(g), static_cast<ValueSet>(d), static_cast<ValueSet>(bit)};
        r.witness = {verdict_line(fmt(g), fmt(d | bit), true), verdict_line(fmt(g | bit), fmt(d), true),
                     verdict_line(fmt(g), fmt(d), false)};
        return r;
      }
    }
  }
  return r;
}

// Left-to-right: g+s |= d implies g |= s+d. Right-to-left: g |= s+d implies g+s |= d.
PropertyReport permeable_check(int n, const Verdict& h, const Fmt& fmt) {
  PropertyReport l2r{"left-to-right permeable", true, {}, {}, {}, false};
  PropertyReport r2l{"right-to-left permeable", true, {}, {}, {}, false};
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (2 * n)) && (l2r.holds || r2l.holds); ++idx) {
    std::uint64_t g = idx & full, d = idx >> n;
    for (std::uint64_t s = 0; s <= full; ++s) {
      if (l2r.holds && h(g | s, d) && !h(g, s | d)) {
        l2r.holds = false;
        l2r.value_witness = {static_cast<ValueSet>(g), static_cast<ValueSet>(d), static_cast<ValueSet>(s)};
        l2r.witness = {verdict_line(fmt(g | s), fmt(d), true), verdict_line(fmt(g), fmt(s | d), false)};
      }
      if (r2l.holds && h(g, s | d) && !h(g | s, d)) {
        r2l.holds = false;
        r2l.value_witness = {static_cast<ValueSet>(g), static_cast<ValueSet>(d), static_cast<ValueSet>(s)};
        r2l.witness = {verdict_line(fmt(g), fmt(s | d), true), verdict_line(fmt(g | s), fmt(d), false)};
      }
    }
  }
  PropertyReport r{"permeable", l2r.holds || r2l.holds, {}, {}, {}, false};
  for (const auto* p : {&l2r, &r2l})
    for (const auto& line : p->witness) r.witness.push_back(p->property + " fails: " + line);
  r.parts = {l2r, r2l};
  return r;
}

Verdict relation_verdict(const RelationTable& r) {
  return [&r](std::uint64_t g, std::uint64_t d) {
    return r.holds(static_cast<ValueSet>(g), static_cast<ValueSet>(d));
  };
}

}  // namespace

// ---------------------------------------------------------------- truth level

PropertyReport is_monotonic(const RelationTable& r, const ValueSystem* values, int guard) {
  check_relation_guard(r.value_count(), guard);
  return monotone_check(r.value_count(), relation_verdict(r), value_formatter(values));
}

PropertyReport is_reflexive(const RelationTable& r, const ValueSystem* values, int guard) {
  check_relation_guard(r.value_count(), guard);
  return reflexive_check(r.value_count(), relation_verdict(r), value_formatter(values));
}

PropertyReport is_value_transitive(const RelationTable& r, const ValueSystem* values, int guard) {
  check_relation_guard(r.value_count(), guard);
  return strong_transitive_check(r.value_count(), relation_verdict(r), value_formatter(values));
}

PropertyReport is_cut_transitive(const RelationTable& r, const ValueSystem* values, int guard) {
  check_relation_guard(r.value_count(), guard);
  return cut_check(r.value_count(), relation_verdict(r), value_formatter(values));
}

PropertyReport is_permeable(const RelationTable& r, const ValueSystem* values, int guard) {
  check_relation_guard(r.value_count(), guard);
  return permeable_check(r.value_count(), relation_verdict(r), value_formatter(values));
}

// ---------------------------------------------------------------- fragment level

namespace {

Verdict explicit_verdict(const ArgumentTable& t) {
  return [&t](std::uint64_t g, std::uint64_t d) { return t.holds(g, d); };
}

BitSet with_bit(BitSet b, std::size_t i) {
  b.set(i);
  return b;
}

}  // namespace

PropertyReport is_monotonic(const ArgumentTable& t) {
  if (t.monotone_presentation()) return PropertyReport{"monotonic", true, {}, {}, {}, true};
  auto r = monotone_check(static_cast<int>(t.size()), explicit_verdict(t), formula_formatter(t.formulas()));
  r.fragment_relative = true;
  return r;
}

PropertyReport is_reflexive(const ArgumentTable& t) {
  PropertyReport r;
  if (!t.monotone_presentation()) {
    r = reflexive_check(static_cast<int>(t.size()), explicit_verdict(t), formula_formatter(t.formulas()));
  } else {
    r = PropertyReport{"reflexive", true, {}, {}, {}, false};
    for (std::size_t f = 0; f < t.size() && r.holds; ++f)
      for (const auto& b : t.maximal_failing())
        if (b.p.test(f) && b.n.test(f)) {
          r.holds = false;
          r.witness = {t.formulas()[f].text() + " |/- " + t.formulas()[f].text()};
          break;
        }
  }
  r.fragment_relative = true;
  return r;
}

PropertyReport is_transitive(const ArgumentTable& t) {
  PropertyReport r;
  if (!t.monotone_presentation()) {
    r = strong_transitive_check(static_cast<int>(t.size()), explicit_verdict(t), formula_formatter(t.formulas()));
  } else {
    // Failing pairs live under maximal boxes, so every maximal box must cover the list.
    r = PropertyReport{"transitive", true, {}, {}, {}, false};
    for (const auto& b : t.maximal_failing()) {
      BitSet u = b.p;
      u |= b.n;
      if (u.count() != t.size()) {
        r.holds = false;
        r.witness = {formula_set(t.formulas(), b.p) + " |/- " + formula_set(t.formulas(), b.n),
                     "maximal failing pair does not cover the formula list"};
        break;
      }
    }
  }
  r.fragment_relative = true;
  return r;
}

PropertyReport is_cut_transitive(const ArgumentTable& t) {
  PropertyReport r;
  if (!t.monotone_presentation()) {
    r = cut_check(static_cast<int>(t.size()), explicit_verdict(t), formula_formatter(t.formulas()));
  } else {
    // A cut failure can be pushed up to a maximal box (P, N) and a formula outside P and N.
    r = PropertyReport{"cut", true, {}, {}, {}, false};
    const auto& fs = t.formulas();
    for (const auto& b : t.maximal_failing()) {
      for (std::size_t f = 0; f < t.size() && r.holds; ++f) {
        if (b.p.test(f) || b.n.test(f)) continue;
        if (t.holds(with_bit(b.p, f), b.n) && t.holds(b.p, with_bit(b.n, f))) {
          r.holds = false;
          r.witness = {formula_set(fs, b.p) + " |- " + formula_set(fs, with_bit(b.n, f)),
                       formula_set(fs, with_bit(b.p, f)) + " |- " + formula_set(fs, b.n),
                       formula_set(fs, b.p) + " |/- " + formula_set(fs, b.n)};
        }
      }
      if (!r.holds) break;
    }
  }
  r.fragment_relative = true;
  return r;
}

PropertyReport is_permeable(const ArgumentTable& t) {
  if (!t.monotone_presentation()) {
    auto r = permeable_check(static_cast<int>(t.size()), explicit_verdict(t), formula_formatter(t.formulas()));
    r.fragment_relative = true;
    for (auto& p : r.parts) p.fragment_relative = true;
    return r;
  }
  // For a monotone table the extreme choices suffice: a violation inside box (P, N)
  // exists iff (P u N, N) holds (left-to-right) or (P, P u N) holds (right-to-left).
  const auto& fs = t.formulas();
  PropertyReport l2r{"left-to-right permeable", true, {}, {}, {}, true};
  PropertyReport r2l{"right-to-left permeable", true, {}, {}, {}, true};
  for (const auto& b : t.maximal_failing()) {
    BitSet u = b.p;
    u |= b.n;
    if (l2r.holds && t.holds(u, b.n)) {
      l2r.holds = false;
      l2r.witness = {formula_set(fs, u) + " |- " + formula_set(fs, b.n),
                     formula_set(fs, b.p) + " |/- " + formula_set(fs, u)};
    }
    if (r2l.holds && t.holds(b.p, u)) {
      r2l.holds = false;
      r2l.witness = {formula_set(fs, b.p) + " |- " + formula_set(fs, u),
                     formula_set(fs, u) + " |/- " + formula_set(fs, b.n)};
    }
  }
  PropertyReport r{"permeable", l2r.holds || r2l.holds, {}, {}, {}, true};
  for (const auto* p : {&l2r, &r2l})
    for (const auto& line : p->witness) r.witness.push_back(p->property + " fails: " + line);
  r.parts = {l2r, r2l};
  return r;
}

// ---------------------------------------------------------------- substitution invariance

PropertyReport check_substitution_invariance(const Semantics& s, const Fragment& frag, int subst_depth,
                                             std::size_t guard) {
  if (subst_depth < 0) throw DomainError("substitution depth must be non-negative");
  PropertyReport r{"substitution-invariant", true, {}, {}, {}, true};
  Fragment targets = generate_fragment(frag.atoms, frag.signature, subst_depth, guard);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < frag.atoms.size(); ++i) {
    if (count > guard / std::max<std::size_t>(1, targets.size()))
      throw GuardError("substitution count exceeds the guard of " + std::to_string(guard));
    count *= targets.size();
  }
  const BoxModel base = BoxModel::from_values(evaluate_formulas(s, frag.formulas), s.relation);

  std::vector<std::size_t> choice(frag.atoms.size(), 0);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::uint64_t rest = k;
    for (std::size_t i = frag.atoms.size(); i-- > 0;) {
      choice[i] = rest % targets.size();
      rest /= targets.size();
    }
    std::map<std::string, Formula> m;
    for (std::size_t i = 0; i < frag.atoms.size(); ++i) m.emplace(frag.atoms[i], targets.formulas[choice[i]]);
    Substitution sub(m);
    std::vector<Formula> images;
    images.reserve(frag.size());
    for (const auto& f : frag.formulas) images.push_back(apply_substitution(f, sub));
    const BoxModel img = BoxModel::from_values(evaluate_formulas(s, images), s.relation);
    auto res = compare_verdicts(base, img, 2, VerdictMode::implies);
    if (!res.agree()) {
      r.holds = false;
      std::string sline = "substitution {";
      bool first = true;
      for (const auto& [a, f] : m) {
        sline += (first ? "" : ", ") + a + " -> " + f.text();
        first = false;
      }
      r.witness.push_back(sline + "}");
      r.witness.push_back(format_argument(*res.first, frag.formulas, true));
      r.witness.push_back(format_argument(*res.first, images, false));
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------- regularity

std::string format_rule(const RegularityRule& r) {
  auto side = [](std::uint32_t m) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i)
      if ((m >> i) & 1u) {
        s += (first ? "" : ",") + std::to_string(i + 1);
        first = false;
      }
    return s + "}";
  };
  return "(" + side(r.bp) + ", " + side(r.bc) + ")";
}

std::string format_rules(const std::vector<RegularityRule>& rs) {
  std::string s = "{";
  for (std::size_t i = 0; i < rs.size(); ++i) s += (i ? ", " : "") + format_rule(rs[i]);
  return s + "}";
}

void validate_rules(const RegularityRules& rules, int arity) {
  const std::uint32_t full = arity >= 32 ? ~0u : (1u << arity) - 1;
  for (const auto* side : {&rules.premise_rules, &rules.conclusion_rules})
    for (const auto& r : *side)
      if ((r.bp & ~full) || (r.bc & ~full))
        throw DomainError("regularity rule " + format_rule(r) + " mentions a position beyond arity " +
                          std::to_string(arity));
}

namespace {

// One observed instance: does the left side fail, and which rules fail on the right side.
struct Constraint {
  bool lhs_fails;
  std::uint32_t rule_hits;
  friend auto operator<=>(const Constraint&, const Constraint&) = default;
};

struct Instance {
  std::size_t tuple;
  std::size_t context;
};

struct SideProblem {
  std::vector<Constraint> constraints;  // distinct, in order of first appearance
  std::vector<Instance> origin;         // representative per constraint
};

struct RegularityProblem {
  int arity = 0;
  int rule_count = 0;
  std::vector<std::vector<int>> tuples;                 // fragment indices
  std::vector<Formula> applied;                         // C(F1..Fn) per tuple
  std::vector<std::pair<BitSet, BitSet>> contexts;      // representative (Gamma, Delta)
  SideProblem side[2];                                  // 0 = premise, 1 = conclusion
};

using Mask = std::vector<std::uint64_t>;

Mask and_mask(Mask m, const std::uint64_t* x) {
  for (std::size_t w = 0; w < m.size(); ++w) m[w] &= x[w];
  return m;
}

bool meets(const Mask& a, const Mask& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & b[w]) return true;
  return false;
}

RegularityProblem build_problem(const Semantics& s, const ConnectiveSig& c, const Fragment& frag) {
  if (c.arity > kMaxRegularityArity)
    throw DomainError("regularity search supports arity <= " + std::to_string(kMaxRegularityArity) + ", got " +
                      std::to_string(c.arity));
  if (!s.signature.contains(c)) throw DomainError("connective '" + c.name + "' is not in the semantics' signature");
  RegularityProblem p;
  p.arity = c.arity;
  p.rule_count = 1 << (2 * c.arity);

  const std::size_t n = frag.size();
  std::size_t tuple_count = 1;
  for (int i = 0; i < c.arity; ++i) {
    if (tuple_count > kDefaultFormulaGuard * 10 / std::max<std::size_t>(1, n))
      throw GuardError("regularity check over too many argument tuples");
    tuple_count *= n;
  }
  for (std::size_t t = 0; t < tuple_count; ++t) {
    std::vector<int> tup(c.arity);
    std::size_t rest = t;
    for (int i = c.arity; i-- > 0;) {
      tup[i] = static_cast<int>(rest % n);
      rest /= n;
    }
    std::vector<Formula> args;
    for (int x : tup) args.push_back(frag.formulas[x]);
    p.applied.push_back(Formula::apply(c, args));
    p.tuples.push_back(std::move(tup));
  }

  std::vector<Formula> all = frag.formulas;
  all.insert(all.end(), p.applied.begin(), p.applied.end());
  const BoxModel bm = BoxModel::from_values(evaluate_formulas(s, all), s.relation);
  Mask ones(bm.words, 0);
  for (std::size_t b = 0; b < bm.box_count; ++b) ones[b >> 6] |= std::uint64_t{1} << (b & 63);

  // Distinct context masks over premise/conclusion sets of size <= 2.
  auto side_masks = [&](bool premise) {
    std::map<Mask, BitSet> seen;
    std::vector<std::pair<Mask, BitSet>> out;
    for (const auto& set : small_subsets(static_cast<int>(n), 2)) {
      Mask m = ones;
      BitSet b(n);
      for (int f : set) {
        m = and_mask(std::move(m), premise ? bm.p_mask(f) : bm.n_mask(f));
        b.set(f);
      }
      if (seen.emplace(m, b).second) out.emplace_back(std::move(m), std::move(b));
    }
    return out;
  };
  const auto gammas = side_masks(true);
  const auto deltas = side_masks(false);
  std::vector<Mask> ctx;
  {
    std::set<Mask> seen;
    for (const auto& [gm, gb] : gammas)
      for (const auto& [dm, db] : deltas) {
        Mask m = gm;
        for (std::size_t w = 0; w < m.size(); ++w) m[w] &= dm[w];
        if (seen.insert(m).second) {
          ctx.push_back(std::move(m));
          p.contexts.emplace_back(gb, db);
        }
      }
  }

  for (int sd = 0; sd < 2; ++sd) {
    std::map<Constraint, std::size_t> index;
    for (std::size_t t = 0; t < p.tuples.size(); ++t) {
      const std::size_t cf = n + t;
      const std::uint64_t* cmask = sd == 0 ? bm.p_mask(cf) : bm.n_mask(cf);
      std::vector<Mask> rule_masks(p.rule_count);
      for (int r = 0; r < p.rule_count; ++r) {
        RegularityRule rule = rule_from_index(static_cast<std::uint32_t>(r), c.arity);
        Mask m = ones;
        for (int i = 0; i < c.arity; ++i) {
          if ((rule.bp >> i) & 1u) m = and_mask(std::move(m), bm.p_mask(p.tuples[t][i]));
          if ((rule.bc >> i) & 1u) m = and_mask(std::move(m), bm.n_mask(p.tuples[t][i]));
        }
        rule_masks[r] = std::move(m);
      }
      for (std::size_t k = 0; k < ctx.size(); ++k) {
        Constraint con{false, 0};
        for (std::size_t w = 0; w < bm.words; ++w)
          if (ctx[k][w] & cmask[w]) con.lhs_fails = true;
        for (int r = 0; r < p.rule_count; ++r)
          if (meets(ctx[k], rule_masks[r])) con.rule_hits |= 1u << r;
        if (index.emplace(con, p.side[sd].constraints.size()).second) {
          p.side[sd].constraints.push_back(con);
          p.side[sd].origin.push_back({t, k});
        }
      }
    }
  }
  return p;
}

std::uint32_t rule_set_mask(const std::vector<RegularityRule>& rs, int arity) {
  std::uint32_t m = 0;
  for (const auto& r : rs) m |= 1u << rule_index(r, arity);
  return m;
}

std::vector<RegularityRule> rules_of_mask(std::uint32_t m, int arity) {
  std::vector<RegularityRule> out;
  for (std::uint32_t i = 0; i < 32; ++i)
    if ((m >> i) & 1u) out.push_back(rule_from_index(i, arity));
  return out;
}

// Index of the first violated constraint, or -1.
long first_violation(const SideProblem& sp, std::uint32_t set) {
  for (std::size_t i = 0; i < sp.constraints.size(); ++i) {
    const auto& c = sp.constraints[i];
    if (c.lhs_fails != ((c.rule_hits & set) != 0)) return static_cast<long>(i);
  }
  return -1;
}

std::optional<std::uint32_t> minimal_side(const SideProblem& sp, int rule_count) {
  const auto candidates = small_subsets(rule_count, rule_count);
  const long total = static_cast<long>(candidates.size());
  long best = std::numeric_limits<long>::max();
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
  for (long i = 0; i < total; ++i) {
    if (i >= best) continue;
    std::uint32_t m = 0;
    for (int r : candidates[i]) m |= 1u << r;
    if (first_violation(sp, m) < 0) best = std::min(best, i);
  }
  if (best == std::numeric_limits<long>::max()) return std::nullopt;
  std::uint32_t m = 0;
  for (int r : candidates[best]) m |= 1u << r;
  return m;
}

std::optional<std::uint32_t> canonical_side(const SideProblem& sp, int rule_count) {
  std::uint32_t sound = rule_count >= 32 ? ~0u : (1u << rule_count) - 1;
  for (const auto& c : sp.constraints)
    if (!c.lhs_fails) sound &= ~c.rule_hits;
  if (first_violation(sp, sound) >= 0) return std::nullopt;
  return sound;
}

}  // namespace

PropertyReport verify_regularity(const Semantics& s, const ConnectiveSig& c, const RegularityRules& rules,
                                 const Fragment& frag) {
  validate_rules(rules, c.arity);
  const RegularityProblem p = build_problem(s, c, frag);
  PropertyReport r{"regular(" + c.name + ")", true, {}, {}, {}, true};
  const std::vector<RegularityRule>* sides[2] = {&rules.premise_rules, &rules.conclusion_rules};
  for (int sd = 0; sd < 2; ++sd) {
    long v = first_violation(p.side[sd], rule_set_mask(*sides[sd], c.arity));
    if (v < 0) continue;
    const auto& con = p.side[sd].constraints[v];
    const auto& in = p.side[sd].origin[v];
    const auto& [g, d] = p.contexts[in.context];
    const std::string cf = p.applied[in.tuple].text();
    const std::string gs = formula_set(frag.formulas, g), ds = formula_set(frag.formulas, d);
    r.holds = false;
    r.witness.push_back(std::string(sd == 0 ? "premise" : "conclusion") + " rules " + format_rules(*sides[sd]));
    r.witness.push_back("Gamma = " + gs + ", Delta = " + ds);
    std::string lhs = sd == 0 ? "Gamma, " + cf + " |- Delta" : "Gamma |- " + cf + ", Delta";
    r.witness.push_back(lhs + (con.lhs_fails ? " fails" : " holds") + ", rule conjunction " +
                        (con.lhs_fails ? "holds" : "fails"));
    return r;
  }
  return r;
}

std::optional<RegularityRules> search_regularity(const Semantics& s, const ConnectiveSig& c, const Fragment& frag,
                                                 RegularitySearch mode) {
  const RegularityProblem p = build_problem(s, c, frag);
  std::uint32_t found[2];
  for (int sd = 0; sd < 2; ++sd) {
    auto m = mode == RegularitySearch::minimal ? minimal_side(p.side[sd], p.rule_count)
                                               : canonical_side(p.side[sd], p.rule_count);
    if (!m) return std::nullopt;
    found[sd] = *m;
  }
  return RegularityRules{rules_of_mask(found[0], c.arity), rules_of_mask(found[1], c.arity)};
}

}  // namespace mvl
