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

#include "mvl/logiclib.hpp"

#include <numeric>
#include <stdexcept>

#include "mvl/error.hpp"
#include "mvl/rank.hpp"
#include "mvl/reduce.hpp"

namespace mvl {

namespace {

const ConnectiveSig kNegSig{"neg", 1};
const ConnectiveSig kAndSig{"and", 2};
const ConnectiveSig kOrSig{"or", 2};
const ConnectiveSig kCondSig{"cond", 2};

ValueSystem three_values() {
  ValueSystem v;
  v.labels = {"1", "1/2", "0"};
  v.one = 0;
  v.zero = 2;
  return v;
}

// Canonical four-valued function restricted to {1, h, 0}, with h read as the middle value.
// `keep` lists the reduced values standing for the restricted ones, in order.
TruthFunction restricted_canonical(const std::string& name, int arity, const std::vector<int>& keep) {
  const TruthFunction full = canonical_truth_function(standard_rules().at(name), arity, name);
  const int k = static_cast<int>(keep.size());
  return TruthFunction::from({name, arity}, k, [&](const std::vector<int>& args) {
    std::vector<int> mapped;
    for (int a : args) mapped.push_back(keep[a]);
    const int out = full.apply(mapped);
    for (int i = 0; i < k; ++i)
      if (keep[i] == out) return i;
    throw std::logic_error("canonical table leaves the restricted value set");
  });
}

Semantics kleene_family(const std::vector<int>& keep, MixedRelation rel) {
  Semantics s;
  s.values = keep.size() == 2 ? ValueSystem{{"1", "0"}, 0, 1, std::nullopt, std::nullopt} : three_values();
  s.signature = standard_signature();
  s.truth_functions["neg"] = restricted_canonical("neg", 1, keep);
  s.truth_functions["and"] = restricted_canonical("and", 2, keep);
  s.truth_functions["or"] = restricted_canonical("or", 2, keep);
  s.truth_functions["cond"] = restricted_canonical("cond", 2, keep);
  // Constants: top, bot, and half for the three-valued logics.
  const int k = s.values.size();
  s.signature.add({"top", 0});
  s.signature.add({"bot", 0});
  s.truth_functions["top"] = TruthFunction::constant({"top", 0}, k, 0);
  s.truth_functions["bot"] = TruthFunction::constant({"bot", 0}, k, k - 1);
  if (k == 3) {
    s.signature.add({"half", 0});
    s.truth_functions["half"] = TruthFunction::constant({"half", 0}, k, 1);
  }
  s.relation = {k, {rel}};
  s.valuational = true;
  return s;
}

const std::vector<int> kClassicalKeep{v4::one, v4::zero};
const std::vector<int> kPSideKeep{v4::one, v4::hash_p, v4::zero};
const std::vector<int> kCSideKeep{v4::one, v4::hash_c, v4::zero};

Semantics mixed4() {
  Semantics s;
  s.values = reduction_value_system();
  // Order: 0 below everything, 1 above; #p and #c incomparable with meet 0 and join 1.
  auto rank_of = [](int v) { return v == v4::zero ? 0 : v == v4::one ? 2 : 1; };
  auto meet = [&](int a, int b) {
    if (a == b) return a;
    if (rank_of(a) == 1 && rank_of(b) == 1) return static_cast<int>(v4::zero);
    return rank_of(a) < rank_of(b) ? a : b;
  };
  auto join = [&](int a, int b) {
    if (a == b) return a;
    if (rank_of(a) == 1 && rank_of(b) == 1) return static_cast<int>(v4::one);
    return rank_of(a) > rank_of(b) ? a : b;
  };
  s.signature = Signature{kNegSig, kAndSig, kOrSig, {"top", 0}, {"bot", 0}, {"hp", 0}, {"hc", 0}};
  s.truth_functions["neg"] = TruthFunction::from(kNegSig, 4, [](const std::vector<int>& a) {
    return a[0] == v4::zero ? static_cast<int>(v4::one) : static_cast<int>(v4::zero);
  });
  s.truth_functions["and"] = TruthFunction::from(kAndSig, 4, [&](const std::vector<int>& a) { return meet(a[0], a[1]); });
  s.truth_functions["or"] = TruthFunction::from(kOrSig, 4, [&](const std::vector<int>& a) { return join(a[0], a[1]); });
  s.truth_functions["top"] = TruthFunction::constant({"top", 0}, 4, v4::one);
  s.truth_functions["bot"] = TruthFunction::constant({"bot", 0}, 4, v4::zero);
  s.truth_functions["hp"] = TruthFunction::constant({"hp", 0}, 4, v4::hash_p);
  s.truth_functions["hc"] = TruthFunction::constant({"hc", 0}, 4, v4::hash_c);
  s.relation = reduction_relation();
  s.valuational = true;
  return s;
}

std::string fraction(int num, int den) {
  if (num == 0) return "0";
  if (num == den) return "1";
  const int g = std::gcd(num, den);
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

// n totally ordered values, index 0 = top. c_i takes the i-th value from the bottom.
Semantics order_n(int n) {
  Semantics s;
  for (int i = 0; i < n; ++i) s.values.labels.push_back(fraction(n - 1 - i, n - 1));
  s.values.one = 0;
  s.values.zero = n - 1;
  s.signature = Signature{kNegSig, kAndSig, kOrSig, {"top", 0}, {"bot", 0}};
  for (int i = 1; i <= n; ++i) s.signature.add({"c" + std::to_string(i), 0});
  s.truth_functions["neg"] = TruthFunction::from(kNegSig, n, [n](const std::vector<int>& a) { return n - 1 - a[0]; });
  // Lower index = higher value.
  s.truth_functions["and"] = TruthFunction::from(kAndSig, n, [](const std::vector<int>& a) { return std::max(a[0], a[1]); });
  s.truth_functions["or"] = TruthFunction::from(kOrSig, n, [](const std::vector<int>& a) { return std::min(a[0], a[1]); });
  s.truth_functions["top"] = TruthFunction::constant({"top", 0}, n, 0);
  s.truth_functions["bot"] = TruthFunction::constant({"bot", 0}, n, n - 1);
  for (int i = 1; i <= n; ++i) {
    const std::string name = "c" + std::to_string(i);
    s.truth_functions[name] = TruthFunction::constant({name, 0}, n, n - i);
  }
  // Intersection of the pure relations on the up-sets {x >= value i}, i = 2..n.
  s.relation.value_count = n;
  for (int i = n; i >= 2; --i) {
    const ValueSet d = full_set(n - i + 1);
    s.relation.members.push_back({d, d});
  }
  s.valuational = true;
  return s;
}

Semantics product2() {
  Semantics s;
  // Index = 2 * (1 - a) + (1 - b) for the pair (a, b).
  s.values.labels = {"(1,1)", "(1,0)", "(0,1)", "(0,0)"};
  s.values.one = 0;
  s.values.zero = 3;
  s.signature = standard_signature();
  auto fst = [](int v) { return v < 2 ? 1 : 0; };
  auto snd = [](int v) { return v % 2 == 0 ? 1 : 0; };
  auto pack = [](int a, int b) { return 2 * (1 - a) + (1 - b); };
  s.truth_functions["neg"] = TruthFunction::from(kNegSig, 4, [&](const std::vector<int>& x) {
    return pack(1 - fst(x[0]), 1 - snd(x[0]));
  });
  s.truth_functions["and"] = TruthFunction::from(kAndSig, 4, [&](const std::vector<int>& x) {
    return pack(fst(x[0]) & fst(x[1]), snd(x[0]) & snd(x[1]));
  });
  s.truth_functions["or"] = TruthFunction::from(kOrSig, 4, [&](const std::vector<int>& x) {
    return pack(fst(x[0]) | fst(x[1]), snd(x[0]) | snd(x[1]));
  });
  s.truth_functions["cond"] = TruthFunction::from(kCondSig, 4, [&](const std::vector<int>& x) {
    return pack((1 - fst(x[0])) | fst(x[1]), (1 - snd(x[0])) | snd(x[1]));
  });
  const ValueSet first_true = singleton(0) | singleton(1), second_true = singleton(0) | singleton(2);
  s.relation = {4, {{first_true, first_true}, {second_true, second_true}}};
  s.valuational = true;
  return s;
}

// Nonempty sets I of classical valuations: premises true throughout I must make some
// conclusion true throughout I.
SupervaluationData supervaluation_data(const Semantics& classical) {
  const Signature sig = classical.signature;
  std::vector<Formula> roots;
  for (const char* t : {"p", "~p", "(p | ~p)", "(p & ~p)"}) roots.push_back(parse_formula(t, sig));
  const Fragment frag = closure_fragment(roots);
  SupervaluationData d{frag.formulas, ArgumentTable{}, {}};
  const ValueMatrix vals = evaluate_formulas(classical, d.formulas);
  const std::size_t n = d.formulas.size(), W = vals.world_count;
  std::vector<Box> boxes;
  for (std::uint64_t I = 1; I < (std::uint64_t{1} << W); ++I) {
    Box b{BitSet(n), BitSet(n)};
    for (std::size_t f = 0; f < n; ++f) {
      bool super_true = true;
      for (std::size_t w = 0; w < W; ++w)
        if (((I >> w) & 1u) && vals(w, f) != *classical.values.one) super_true = false;
      if (super_true)
        b.p.set(f);
      else
        b.n.set(f);
    }
    boxes.push_back(std::move(b));
  }
  d.table = ArgumentTable::from_boxes(d.formulas, std::move(boxes));
  const auto sets = small_subsets(static_cast<int>(n), static_cast<int>(n));
  std::vector<Argument> args;
  for (const auto& g : sets)
    for (const auto& c : sets) args.push_back({g, c});
  d.traces = trace_arguments(vals, args);
  return d;
}

void expect(BuiltinSpec& b, bool mono, bool refl, bool trans, bool perm) {
  b.expected_properties = {{"monotonic", mono}, {"reflexive", refl}, {"transitive", trans}, {"permeable", perm}};
  b.expected_rank = classify_rank({mono, refl, trans, perm});
  b.rank_basis = "theorem";
}

BuiltinSpec make(const std::string& name) {
  BuiltinSpec b;
  b.name = name;
  if (name == "classical") {
    b.description = "two-valued classical logic, relation ({1},{1})";
    b.semantics = kleene_family(kClassicalKeep, {1, 1});
    expect(b, true, true, true, false);
  } else if (name == "k3" || name == "lp" || name == "st" || name == "ts") {
    const ValueSet one = singleton(0), one_half = singleton(0) | singleton(1);
    const bool p_side = name == "k3" || name == "ts";
    MixedRelation rel = name == "k3" ? MixedRelation{one, one}
                        : name == "lp" ? MixedRelation{one_half, one_half}
                        : name == "st" ? MixedRelation{one, one_half}
                                       : MixedRelation{one_half, one};
    b.semantics = kleene_family(p_side ? kPSideKeep : kCSideKeep, rel);
    b.description = "strong Kleene tables on {1, 1/2, 0}, relation (" + b.semantics.values.format(rel.dp) + ", " +
                    b.semantics.values.format(rel.dc) + ")";
    expect(b, true, name != "ts", name != "st", false);
  } else if (name == "mixed4") {
    b.description = "four values, relation ({1,#p},{1,#c}), constants top, bot, hp, hc";
    b.semantics = mixed4();
    expect(b, true, false, false, false);
  } else if (name.rfind("order-", 0) == 0) {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(name.substr(6), &used);
      if (used != name.size() - 6) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n < 2 || n > 5) throw DomainError("order-n needs 2 <= n <= 5, got '" + name + "'");
    b.description = std::to_string(n) + " totally ordered values, gamma |= delta iff min(gamma) <= max(delta); constants c1..c" +
                    std::to_string(n);
    b.semantics = order_n(n);
    expect(b, true, true, true, false);
    b.expected_tf_rank = n;
  } else if (name == "product2") {
    b.description = "classical product over pairs, relation = both coordinates classical";
    b.semantics = product2();
    expect(b, true, true, true, false);
  } else if (name == "supervaluationist-fragment") {
    b.description = "classical tables with supervaluationist consequence over nonempty sets of valuations; "
                    "verdicts and traces stored for the closure of p, ~p, p | ~p, p & ~p";
    b.semantics = kleene_family(kClassicalKeep, {1, 1});
    b.semantics.signature = b.semantics.signature.restrict_to({"neg", "and", "or"});
    for (const char* c : {"cond", "top", "bot"}) b.semantics.truth_functions.erase(c);
    b.supervaluation = supervaluation_data(b.semantics);
    expect(b, true, true, true, false);
  } else {
    throw DomainError("unknown builtin '" + name + "'");
  }
  b.semantics.validate();
  return b;
}

PropertyReport expectation_report(const ExpectedProperty& e, const PropertyReport& actual) {
  PropertyReport r;
  r.property = "expected " + e.property + (e.holds ? "" : " fails");
  r.holds = actual.holds == e.holds;
  r.fragment_relative = actual.fragment_relative;
  if (!r.holds) {
    r.witness.push_back("expected " + std::string(e.holds ? "holds" : "fails") + ", got " +
                        (actual.holds ? "holds" : "fails"));
    r.witness.insert(r.witness.end(), actual.witness.begin(), actual.witness.end());
  }
  return r;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"classical", "k3",      "lp",      "st",      "ts",       "mixed4",
          "order-2",   "order-3", "order-4", "order-5", "product2", "supervaluationist-fragment"};
}

std::vector<PropertyReport> truth_level_profile(const Semantics& s) {
  const RelationTable t = tabulate(s.relation);
  auto named = [](PropertyReport r, const char* name) {
    r.property = name;
    return r;
  };
  return {named(is_monotonic(t, &s.values), "monotonic"), named(is_reflexive(t, &s.values), "reflexive"),
          named(is_value_transitive(t, &s.values), "transitive"), named(is_permeable(t, &s.values), "permeable")};
}

std::vector<PropertyReport> self_test(const BuiltinSpec& spec) {
  std::vector<PropertyReport> actual;
  if (spec.supervaluation) {
    const auto& t = spec.supervaluation->table;
    actual = {is_monotonic(t), is_reflexive(t), is_transitive(t), is_permeable(t)};
  } else {
    actual = truth_level_profile(spec.semantics);
  }
  std::vector<PropertyReport> out;
  StructuralProfile profile;
  for (std::size_t i = 0; i < spec.expected_properties.size(); ++i) {
    const auto& e = spec.expected_properties[i];
    out.push_back(expectation_report(e, actual[i]));
    if (e.property == "monotonic") profile.monotone = actual[i].holds;
    if (e.property == "reflexive") profile.reflexive = actual[i].holds;
    if (e.property == "transitive") profile.transitive = actual[i].holds;
    if (e.property == "permeable") profile.permeable = actual[i].holds;
  }
  PropertyReport rank;
  rank.property = "expected rank " + std::to_string(spec.expected_rank);
  const int predicted = classify_rank(profile);
  rank.holds = predicted == spec.expected_rank;
  if (!rank.holds) rank.witness.push_back("profile predicts rank " + std::to_string(predicted));
  out.push_back(rank);
  return out;
}

BuiltinSpec builtin(const std::string& name) {
  BuiltinSpec b = make(name);
  for (const auto& r : self_test(b))
    if (!r.holds) {
      std::string msg = "builtin '" + name + "' failed its self-test: " + r.property;
      for (const auto& w : r.witness) msg += "; " + w;
      throw std::logic_error(msg);
    }
  return b;
}

}  // namespace mvl
