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

#include "mvl/decompose.hpp"
#include "mvl/error.hpp"
#include "mvl/logiclib.hpp"
#include "mvl/structure.hpp"
#include "oracles.hpp"

using namespace mvl;

namespace {

RelationTable rel(int n, std::vector<MixedRelation> ms) { return tabulate({n, std::move(ms)}); }

const ValueSystem kThree{{"1", "1/2", "0"}, 0, 2, {}, {}};

}  // namespace

TEST(Structure, TruthLevelExamples) {
  const RelationTable st = rel(3, {{0b001, 0b011}});
  const RelationTable ts = rel(3, {{0b011, 0b001}});
  EXPECT_TRUE(is_monotonic(st).holds);
  EXPECT_TRUE(is_reflexive(st).holds);
  const PropertyReport r = is_reflexive(ts, &kThree);
  EXPECT_FALSE(r.holds);
  ASSERT_EQ(r.value_witness.size(), 1u);
  EXPECT_EQ(r.value_witness[0], 0b010u);  // 1/2
  EXPECT_TRUE(is_value_transitive(ts).holds);
  EXPECT_FALSE(is_value_transitive(st).holds);
  EXPECT_TRUE(is_value_transitive(rel(2, {{0b01, 0b01}})).holds);
  const PropertyReport p = is_permeable(st);
  EXPECT_FALSE(p.holds);
  ASSERT_EQ(p.parts.size(), 2u);
  EXPECT_FALSE(p.parts[0].holds);
  EXPECT_FALSE(p.parts[1].holds);
  const RelationTable universal = rel(3, {});
  EXPECT_TRUE(is_permeable(universal).holds);
  EXPECT_TRUE(is_monotonic(universal).holds);
}

TEST(Structure, NonMonotoneWitness) {
  RelationTable only(2, false);
  only.set(0b01, 0b01, true);
  const PropertyReport r = is_monotonic(only);
  EXPECT_FALSE(r.holds);
  ASSERT_EQ(r.value_witness.size(), 4u);
  EXPECT_FALSE(only.holds(r.value_witness[2], r.value_witness[3]));
  EXPECT_TRUE(only.holds(r.value_witness[0], r.value_witness[1]));
}

TEST(Structure, GuardEnforced) {
  EXPECT_THROW(is_monotonic(RelationTable(6, true)), GuardError);
}

// Every checker agrees with its definition on random relations, monotone or not.
TEST(Structure, CheckersMatchDefinitions) {
  std::mt19937_64 rng(424242);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 150; ++trial) {
      oracle::Rel r;
      if (trial % 3 == 0) {
        r = {n, std::vector<char>(std::size_t{1} << (2 * n))};
        for (auto& x : r.v) x = (rng() % 4) != 0;
      } else {
        r = oracle::random_monotone(n, rng, 1 + trial % 5);
      }
      const RelationTable t = oracle::to_table(r);
      ASSERT_EQ(is_monotonic(t).holds, oracle::monotone(r));
      ASSERT_EQ(is_reflexive(t).holds, oracle::reflexive(r));
      ASSERT_EQ(is_value_transitive(t).holds, oracle::value_transitive(r));
      const PropertyReport p = is_permeable(t);
      ASSERT_EQ(p.parts[0].holds, oracle::permeable_l2r(r));
      ASSERT_EQ(p.parts[1].holds, oracle::permeable_r2l(r));
      ASSERT_EQ(p.holds, oracle::permeable_l2r(r) || oracle::permeable_r2l(r));
    }
}

// Member shape implies the property, for every member choice at |V| <= 3 (and singletons at 4).
TEST(Structure, MemberShapesImplyProperties) {
  for (int n = 1; n <= 4; ++n) {
    const ValueSet N = full_set(n);
    for (ValueSet dp = 0; dp <= N; ++dp)
      for (ValueSet dc = 0; dc <= N; ++dc) {
        const RelationTable t = rel(n, {{dp, dc}});
        ASSERT_TRUE(is_monotonic(t).holds);
        if (subset_of(dp, dc)) ASSERT_TRUE(is_reflexive(t).holds);
        if (subset_of(dc, dp)) ASSERT_TRUE(is_value_transitive(t).holds);
      }
  }
  const int n = 3;
  std::vector<MixedRelation> p_mixed, q_mixed;
  for (ValueSet dp = 0; dp < 8; ++dp)
    for (ValueSet dc = 0; dc < 8; ++dc) {
      if (subset_of(dp, dc)) p_mixed.push_back({dp, dc});
      if (subset_of(dc, dp)) q_mixed.push_back({dp, dc});
    }
  for (std::size_t a = 0; a < p_mixed.size(); ++a)
    for (std::size_t b = a; b < p_mixed.size(); ++b) ASSERT_TRUE(is_reflexive(rel(n, {p_mixed[a], p_mixed[b]})).holds);
  for (std::size_t a = 0; a < q_mixed.size(); ++a)
    for (std::size_t b = a; b < q_mixed.size(); ++b)
      ASSERT_TRUE(is_value_transitive(rel(n, {q_mixed[a], q_mixed[b]})).holds);
}

TEST(Structure, NonPermeableDecompositionsArePolarized) {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 400; ++trial) {
      const oracle::Rel r = oracle::random_monotone(n, rng, 1 + trial % 6);
      if (oracle::permeable_l2r(r) || oracle::permeable_r2l(r)) continue;
      const Classification c = classify_relation(decompose_monotone(oracle::to_table(r)));
      ASSERT_TRUE(c.t_polarized && c.f_polarized);
      ++checked;
    }
  EXPECT_GT(checked, 100);
}

TEST(Structure, FragmentLevelChecks) {
  const Semantics st = builtin("st").semantics;
  const Fragment frag = generate_fragment({"p"}, st.signature.restrict_to({"neg"}), 1);
  const ArgumentTable t = table_from_semantics(st, frag.formulas);
  EXPECT_TRUE(is_monotonic(t).holds);
  EXPECT_TRUE(is_reflexive(t).holds);
  // Over all valuations ST agrees with classical consequence, so the fragment is transitive
  // even though the value relation is not.
  const PropertyReport tr = is_transitive(t);
  EXPECT_TRUE(tr.holds);
  EXPECT_TRUE(tr.fragment_relative);
  EXPECT_FALSE(is_value_transitive(tabulate(st.relation)).holds);
  EXPECT_FALSE(is_permeable(t).holds);

  const Semantics ts = builtin("ts").semantics;
  const ArgumentTable u = table_from_semantics(ts, frag.formulas);
  EXPECT_FALSE(is_reflexive(u).holds);
  EXPECT_TRUE(is_transitive(u).holds);
  EXPECT_TRUE(is_cut_transitive(u).holds);
}

TEST(Structure, ExplicitNonMonotoneTable) {
  std::vector<Formula> fs{Formula::atom("p")};
  // Only the empty argument holds.
  const ArgumentTable t = ArgumentTable::from_verdicts(fs, {1, 0, 0, 0});
  EXPECT_FALSE(is_monotonic(t).holds);
  EXPECT_FALSE(t.is_monotone());
}

TEST(Structure, SubstitutionInvarianceFailsWithoutAllValuations) {
  // One world where p is true and q false: p |- p holds, but so does |- p, which breaks under p -> q.
  Semantics s = builtin("classical").semantics;
  s.valuational = false;
  s.worlds = {World{{{"p", *s.values.one}, {"q", *s.values.zero}}}};
  const Fragment frag = generate_fragment({"p", "q"}, s.signature.restrict_to({"neg"}), 1);
  const PropertyReport r = check_substitution_invariance(s, frag, 0);
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(r.witness.empty());
}

// ---- regularity

TEST(Regularity, VerifiesExampleRules) {
  const Semantics cl = builtin("classical").semantics;
  const Fragment frag = generate_fragment({"p", "q"}, cl.signature.restrict_to({"neg", "and", "or", "cond"}), 1);
  const RegularityRules neg{{{0, 1}}, {{1, 0}}};
  EXPECT_TRUE(verify_regularity(cl, {"neg", 1}, neg, frag).holds);
  const RegularityRules conj{{{3, 0}}, {{0, 1}, {0, 2}}};
  EXPECT_TRUE(verify_regularity(cl, {"and", 2}, conj, frag).holds);
  const RegularityRules bad{{{0, 1}}, {{0, 1}}};
  EXPECT_FALSE(verify_regularity(cl, {"neg", 1}, bad, frag).holds);
}

TEST(Regularity, SearchFindsExampleRules) {
  const Semantics cl = builtin("classical").semantics;
  const Fragment frag = generate_fragment({"p", "q"}, cl.signature.restrict_to({"neg", "and", "or", "cond"}), 1);
  const auto disj = search_regularity(cl, {"or", 2}, frag);
  ASSERT_TRUE(disj);
  EXPECT_EQ(disj->premise_rules, (std::vector<RegularityRule>{{1, 0}, {2, 0}}));
  EXPECT_EQ(disj->conclusion_rules, (std::vector<RegularityRule>{{0, 3}}));
  const auto cond = search_regularity(cl, {"cond", 2}, frag);
  ASSERT_TRUE(cond);
  EXPECT_EQ(cond->conclusion_rules, (std::vector<RegularityRule>{{1, 2}}));
  EXPECT_TRUE(verify_regularity(cl, {"cond", 2}, *cond, frag).holds);
}

TEST(Regularity, ThreeValuedNegationIsNotRegular) {
  for (const char* name : {"k3", "lp"}) {
    const Semantics s = builtin(name).semantics;
    const Fragment frag = generate_fragment({"p", "q"}, s.signature.restrict_to({"neg"}), 1);
    EXPECT_FALSE(search_regularity(s, {"neg", 1}, frag).has_value()) << name;
    EXPECT_FALSE(verify_regularity(s, {"neg", 1}, RegularityRules{{{0, 1}}, {{1, 0}}}, frag).holds) << name;
  }
}

TEST(Regularity, CanonicalModeIsValidAndContainsMinimal) {
  const Semantics cl = builtin("classical").semantics;
  const Fragment frag = generate_fragment({"p", "q"}, cl.signature.restrict_to({"neg", "and", "or", "cond"}), 1);
  for (const ConnectiveSig c : {ConnectiveSig{"and", 2}, ConnectiveSig{"or", 2}, ConnectiveSig{"neg", 1}}) {
    const auto min = search_regularity(cl, c, frag, RegularitySearch::minimal);
    const auto can = search_regularity(cl, c, frag, RegularitySearch::canonical);
    ASSERT_TRUE(min && can);
    EXPECT_TRUE(verify_regularity(cl, c, *can, frag).holds);
    for (const auto& r : min->premise_rules)
      EXPECT_NE(std::find(can->premise_rules.begin(), can->premise_rules.end(), r), can->premise_rules.end());
  }
}

TEST(Regularity, RejectsBadRulesAndArity) {
  EXPECT_THROW(validate_rules(RegularityRules{{{4, 0}}, {}}, 2), Error);
  const Semantics cl = builtin("classical").semantics;
  Semantics s = cl;
  s.signature.add({"maj", 3});
  s.truth_functions["maj"] = TruthFunction::from({"maj", 3}, 2, [](const std::vector<int>& a) {
    return (a[0] + a[1] + a[2]) >= 2 ? 1 : 0;
  });
  const Fragment frag = generate_fragment({"p"}, s.signature.restrict_to({"neg"}), 1);
  EXPECT_THROW(search_regularity(s, {"maj", 3}, frag), Error);
}
