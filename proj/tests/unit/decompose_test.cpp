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

void expect_reconstructs(const RelationTable& r, const IntersectiveRelation& d) {
  // Independent evaluation of the members against the original table.
  std::vector<std::pair<oracle::Set, oracle::Set>> ms;
  for (const auto& m : d.members) ms.emplace_back(oracle::to_set(m.dp, d.value_count), oracle::to_set(m.dc, d.value_count));
  ASSERT_EQ(oracle::from_members(ms, r.value_count()).v, oracle::from_table(r).v);
}

}  // namespace

TEST(Decompose, Examples) {
  EXPECT_TRUE(decompose_monotone(rel(3, {})).members.empty());
  const RelationTable classical = rel(2, {{0b01, 0b01}});
  expect_reconstructs(classical, decompose_monotone(classical));
  const RelationTable ts = rel(3, {{0b011, 0b001}});
  expect_reconstructs(ts, decompose_monotone(ts));
  const IntersectiveRelation t = decompose_tarskian(classical);
  ASSERT_EQ(t.members.size(), 1u);
  EXPECT_EQ(t.members[0], (MixedRelation{0b01, 0b01}));
}

TEST(Decompose, ShapesFollowPreconditions) {
  const RelationTable st = rel(3, {{0b001, 0b011}});
  const RelationTable ts = rel(3, {{0b011, 0b001}});
  for (const auto& m : decompose_reflexive(st).members) EXPECT_TRUE(subset_of(m.dp, m.dc));
  for (const auto& m : decompose_transitive(ts).members) EXPECT_TRUE(subset_of(m.dc, m.dp));
  expect_reconstructs(ts, decompose_transitive(ts));
  const ValueSystem three{{"1", "1/2", "0"}, 0, 2, {}, {}};
  try {
    decompose_reflexive(ts, &three);
    FAIL();
  } catch (const PreconditionError& e) {
    ASSERT_FALSE(e.witness().empty());
    EXPECT_NE(e.witness()[0].find("{1/2}"), std::string::npos);
  }
  EXPECT_THROW(decompose_transitive(st), PreconditionError);
  EXPECT_THROW(decompose_tarskian(st), PreconditionError);
  const IntersectiveRelation ord{3, {{0b001, 0b001}, {0b011, 0b011}}};
  for (const auto& m : decompose_tarskian(tabulate(ord)).members) EXPECT_EQ(m.dp, m.dc);
  RelationTable odd(2, false);
  odd.set(0b01, 0b01, true);
  EXPECT_THROW(decompose_monotone(odd), PreconditionError);
}

// All 65,536 relations at |V| = 2, monotone ones reconstructed exactly.
TEST(Decompose, ExhaustiveRoundTripAtTwoValues) {
  int monotone = 0;
  for (std::uint32_t bits = 0; bits < (1u << 16); ++bits) {
    oracle::Rel r{2, std::vector<char>(16)};
    for (int i = 0; i < 16; ++i) r.v[i] = (bits >> i) & 1u;
    if (!oracle::monotone(r)) continue;
    ++monotone;
    const RelationTable t = oracle::to_table(r);
    expect_reconstructs(t, decompose_monotone(t));
    expect_reconstructs(t, decompose_monotone(t, false));
  }
  EXPECT_EQ(monotone, 168);
}

TEST(Decompose, SampledRoundTripAtThreeValues) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 1000; ++trial) {
    const oracle::Rel r = oracle::random_monotone(3, rng, 1 + trial % 7);
    const RelationTable t = oracle::to_table(r);
    const IntersectiveRelation d = decompose_monotone(t);
    expect_reconstructs(t, d);
    const bool refl = oracle::reflexive(r), trans = oracle::value_transitive(r);
    if (refl) {
      const auto dr = decompose_reflexive(t);
      expect_reconstructs(t, dr);
      for (const auto& m : dr.members) ASSERT_TRUE(subset_of(m.dp, m.dc));
    }
    if (trans) {
      const auto dt = decompose_transitive(t);
      expect_reconstructs(t, dt);
      for (const auto& m : dt.members) ASSERT_TRUE(subset_of(m.dc, m.dp));
    }
    if (refl && trans) {
      const auto dd = decompose_tarskian(t);
      expect_reconstructs(t, dd);
      for (const auto& m : dd.members) ASSERT_EQ(m.dp, m.dc);
    }
  }
}

TEST(Decompose, MinimizeIntersection) {
  const IntersectiveRelation dup{2, {{0b01, 0b01}, {0b01, 0b01}}};
  EXPECT_EQ(minimize_intersection(dup).members.size(), 1u);
  // (empty set, V) fails only the empty argument, which ({1},{1}) already fails.
  const IntersectiveRelation vac{2, {{0b01, 0b01}, {0b00, 0b11}}};
  const IntersectiveRelation m = minimize_intersection(vac);
  ASSERT_EQ(m.members.size(), 1u);
  EXPECT_EQ(m.members[0], (MixedRelation{0b01, 0b01}));

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<ValueSet> pick(0, 7);
  for (int trial = 0; trial < 300; ++trial) {
    IntersectiveRelation r{3, {}};
    for (int i = 0; i < 1 + trial % 5; ++i) r.members.push_back({pick(rng), pick(rng)});
    const IntersectiveRelation once = minimize_intersection(r);
    ASSERT_EQ(tabulate(once), tabulate(r));
    ASSERT_EQ(minimize_intersection(once), once);
    for (std::size_t drop = 0; drop < once.members.size(); ++drop) {
      IntersectiveRelation less = once;
      less.members.erase(less.members.begin() + static_cast<long>(drop));
      ASSERT_NE(tabulate(less), tabulate(once));
    }
  }
}

TEST(Decompose, ProductRelationMinimizes) {
  const Semantics p = builtin("product2").semantics;
  IntersectiveRelation redundant = p.relation;
  redundant.members.push_back(p.relation.members[0]);
  redundant.members.push_back({p.relation.members[1].dp, p.values.all()});
  const IntersectiveRelation m = minimize_intersection(redundant);
  EXPECT_EQ(tabulate(m), tabulate(p.relation));
  EXPECT_EQ(m.members.size(), 2u);
}

// The enumerator behind the exhaustive sweeps yields the Dedekind numbers, and at
// 2|V| variables its members are exactly the monotone relations.
TEST(Decompose, MonotoneEnumeratorCounts) {
  const std::size_t dedekind[] = {2, 3, 6, 20, 168, 7581};
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(oracle::monotone_functions(k).size(), dedekind[k]);
  for (std::uint64_t f : oracle::monotone_functions(4)) {
    oracle::Rel r{2, std::vector<char>(16)};
    for (int i = 0; i < 16; ++i) r.v[i] = (f >> i) & 1u;
    ASSERT_TRUE(oracle::monotone(r));
  }
}
