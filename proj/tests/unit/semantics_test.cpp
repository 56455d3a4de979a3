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

#include <gtest/gtest.h>

#include "mvl/argument.hpp"
#include "mvl/error.hpp"
#include "mvl/logiclib.hpp"
#include "mvl/semantics.hpp"
#include "oracles.hpp"

using namespace mvl;

namespace {

Formula P(const std::string& t, const Semantics& s) { return parse_formula(t, s.signature); }

std::vector<Formula> Ps(std::initializer_list<const char*> ts, const Semantics& s) {
  std::vector<Formula> out;
  for (const char* t : ts) out.push_back(P(t, s));
  return out;
}

}  // namespace

TEST(Semantics, HoldsMixedExamples) {
  const MixedRelation pure{0b01, 0b01};  // V = {1, 0}, index 0 = 1
  EXPECT_TRUE(holds_mixed(pure, 0b01, 0b01));
  EXPECT_FALSE(holds_mixed(pure, 0, 0));
  const MixedRelation ts{0b011, 0b001};  // {1, 1/2, 0}
  EXPECT_FALSE(holds_mixed(ts, 0b010, 0b010));
  EXPECT_THROW(holds_mixed(ts, 0b1000, 0, 3), DomainError);
}

TEST(Semantics, HoldsMixedAgreesWithDefinitionAndIsMonotone) {
  for (int n = 1; n <= 4; ++n) {
    const ValueSet N = full_set(n);
    for (ValueSet dp = 0; dp <= N; ++dp)
      for (ValueSet dc = 0; dc <= N; ++dc) {
        const MixedRelation r{dp, dc};
        for (ValueSet g = 0; g <= N; ++g)
          for (ValueSet d = 0; d <= N; ++d) {
            const bool h = holds_mixed(r, g, d);
            ASSERT_EQ(h, oracle::mixed(oracle::to_set(dp, n), oracle::to_set(dc, n), oracle::to_set(g, n),
                                       oracle::to_set(d, n)));
            if (h)  // one-element extensions suffice for monotonicity
              for (int x = 0; x < n; ++x) {
                ASSERT_TRUE(holds_mixed(r, g | singleton(x), d));
                ASSERT_TRUE(holds_mixed(r, g, d | singleton(x)));
              }
          }
      }
  }
}

TEST(Semantics, IntersectiveIsConjunctionOfMembers) {
  const int n = 3;
  const ValueSet N = full_set(n);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<ValueSet> pick(0, N);
  for (int trial = 0; trial < 300; ++trial) {
    IntersectiveRelation r{n, {}};
    std::vector<std::pair<oracle::Set, oracle::Set>> ms;
    const int k = trial % 4;
    for (int i = 0; i < k; ++i) {
      MixedRelation m{pick(rng), pick(rng)};
      r.members.push_back(m);
      ms.emplace_back(oracle::to_set(m.dp, n), oracle::to_set(m.dc, n));
    }
    const oracle::Rel ref = oracle::from_members(ms, n);
    for (ValueSet g = 0; g <= N; ++g)
      for (ValueSet d = 0; d <= N; ++d) ASSERT_EQ(holds_intersective(r, g, d), ref.at(g, d));
    EXPECT_EQ(oracle::from_table(tabulate(r)).v, ref.v);
  }
}

TEST(Semantics, IntersectiveExamples) {
  IntersectiveRelation empty{3, {}};
  for (ValueSet g = 0; g < 8; ++g)
    for (ValueSet d = 0; d < 8; ++d) EXPECT_TRUE(holds_intersective(empty, g, d));
  IntersectiveRelation ss_tt{3, {{0b001, 0b001}, {0b011, 0b011}}};
  EXPECT_FALSE(holds_intersective(ss_tt, 0b001, 0b010));
  IntersectiveRelation one{3, {{0b011, 0b001}}};
  for (ValueSet g = 0; g < 8; ++g)
    for (ValueSet d = 0; d < 8; ++d) EXPECT_EQ(holds_intersective(one, g, d), holds_mixed(one.members[0], g, d));
}

TEST(Semantics, EvaluateExamples) {
  const Semantics k3 = builtin("k3").semantics;
  const int half = *k3.values.find("1/2");
  World w{{{"p", half}}};
  EXPECT_EQ(evaluate(k3, P("~p", k3), w), half);
  const Semantics cl = builtin("classical").semantics;
  World w2{{{"p", *cl.values.one}, {"q", *cl.values.zero}}};
  EXPECT_EQ(evaluate(cl, P("(p & q)", cl), w2), *cl.values.zero);
  EXPECT_EQ(evaluate(cl, P("#top", cl), w2), *cl.values.one);
  EXPECT_THROW(evaluate(cl, P("(p & r)", cl), w2), Error);
}

TEST(Semantics, ConsequenceExamples) {
  const Semantics cl = builtin("classical").semantics;
  EXPECT_TRUE(consequence(cl, Ps({"p"}, cl), Ps({"p"}, cl)));
  const Semantics ts = builtin("ts").semantics;
  EXPECT_FALSE(consequence(ts, Ps({"p"}, ts), Ps({"p"}, ts)));
  const Semantics st = builtin("st").semantics;
  EXPECT_TRUE(consequence(st, Ps({"p", "~p"}, st), {}));
  EXPECT_FALSE(consequence(ts, Ps({"p", "~p"}, ts), {}));
  EXPECT_TRUE(consequence(st, Ps({"p"}, st), Ps({"p"}, st)));
}

TEST(Semantics, ClassifyExamples) {
  const Classification pure = classify_relation({2, {{0b01, 0b01}}});
  EXPECT_TRUE(pure.members[0].pure && pure.members[0].p_mixed && pure.members[0].q_mixed);
  EXPECT_TRUE(pure.t_polarized && pure.f_polarized);
  const Classification one_value = classify_relation({1, {{0b1, 0b1}}});
  EXPECT_FALSE(one_value.f_polarized);
  const Classification st = classify_relation({3, {{0b001, 0b011}}});
  EXPECT_TRUE(st.members[0].p_mixed);
  EXPECT_FALSE(st.members[0].q_mixed);
  EXPECT_TRUE(st.t_polarized && st.f_polarized);
  const Classification m4 = classify_relation({4, {{0b0011, 0b0101}}});
  EXPECT_FALSE(m4.members[0].p_mixed || m4.members[0].q_mixed);
  EXPECT_TRUE(m4.t_polarized && m4.f_polarized);
}

TEST(Semantics, ValuationalWorldsAndGuard) {
  const Semantics k3 = builtin("k3").semantics;
  EXPECT_EQ(k3.worlds_over({"p", "q"}).size(), 9u);
  EXPECT_THROW(k3.worlds_over({"a", "b", "c", "d", "e"}, 100), GuardError);
}

TEST(Semantics, ValidationRejectsBadInput) {
  Semantics s = builtin("classical").semantics;
  s.relation.members.push_back({0b100, 0});
  EXPECT_THROW(s.validate(), DomainError);
  ValueSystem v{{"1", "1"}, {}, {}, {}, {}};
  EXPECT_THROW(v.validate(), DomainError);
}

TEST(Semantics, SubstitutionInvarianceOnValuationalSemantics) {
  for (const char* name : {"classical", "st", "ts"}) {
    const Semantics s = builtin(name).semantics;
    const Fragment frag = generate_fragment({"p", "q"}, s.signature.restrict_to({"neg", "and"}), 1);
    EXPECT_TRUE(check_substitution_invariance(s, frag, 1).holds) << name;
  }
}

TEST(TruthRelation, SupervaluationClash) {
  const BuiltinSpec sv = builtin("supervaluationist-fragment");
  const auto& d = *sv.supervaluation;
  const TruthRelationResult r = find_truth_relation(d.table, d.traces, 2);
  ASSERT_FALSE(r.relation.has_value());
  ASSERT_TRUE(r.clash.has_value());
  EXPECT_EQ(format_argument(r.clash->failing.argument, d.formulas, false), "|/- p, ~p");
  ASSERT_EQ(r.clash->forcing.size(), 1u);
  EXPECT_EQ(format_argument(r.clash->forcing[0].argument, d.formulas, true), "|- (p & ~p), (p | ~p)");
}

TEST(TruthRelation, IntersectiveSemanticsRealizeThemselves) {
  for (const char* name : {"classical", "st", "ts", "mixed4"}) {
    const Semantics s = builtin(name).semantics;
    const std::vector<Formula> fs = generate_fragment({"p"}, s.signature.restrict_to({"neg"}), 1).formulas;
    const ArgumentTable t = table_from_semantics(s, fs);
    const auto sets = small_subsets(static_cast<int>(fs.size()), static_cast<int>(fs.size()));
    std::vector<Argument> args;
    for (const auto& g : sets)
      for (const auto& c : sets) args.push_back({g, c});
    const auto traces = trace_arguments(evaluate_formulas(s, fs), args);
    const TruthRelationResult r = find_truth_relation(t, traces, s.values.size());
    ASSERT_TRUE(r.relation.has_value()) << name;
    EXPECT_FALSE(r.clash.has_value());
    // The returned relation reproduces every verdict.
    for (const auto& tr : traces) {
      bool all = true;
      for (const auto& [g, dl] : tr.trace) all = all && r.relation->holds(g, dl);
      EXPECT_EQ(all, t.holds(tr.argument.premises, tr.argument.conclusions));
    }
  }
}

TEST(TruthRelation, SingleWorldTablesAlwaysRealized) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Formula> fs{Formula::atom("p"), Formula::atom("q")};
    std::vector<std::uint8_t> verdicts(16);
    for (auto& v : verdicts) v = rng() & 1u;
    const ArgumentTable t = ArgumentTable::from_verdicts(fs, verdicts);
    // One world: the formulas take distinct values 0 and 1 of a 2-valued system.
    ValueMatrix vals{1, 2, {0, 1}};
    std::vector<Argument> args;
    for (const auto& g : small_subsets(2, 2))
      for (const auto& c : small_subsets(2, 2)) args.push_back({g, c});
    const auto r = find_truth_relation(t, trace_arguments(vals, args), 2);
    EXPECT_TRUE(r.relation.has_value());
    EXPECT_FALSE(r.clash.has_value());
  }
}
