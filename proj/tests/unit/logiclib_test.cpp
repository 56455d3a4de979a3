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

#include <fstream>
#include <sstream>

#include "mvl/decompose.hpp"
#include "mvl/error.hpp"
#include "mvl/interchange.hpp"
#include "mvl/logiclib.hpp"
#include "mvl/rank.hpp"

using namespace mvl;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Logiclib, NamesAndUnknown) {
  const auto names = builtin_names();
  EXPECT_EQ(names.size(), 12u);
  EXPECT_THROW(builtin("nope"), DomainError);
}

TEST(Logiclib, SelfTestsPass) {
  for (const auto& name : builtin_names()) {
    const BuiltinSpec b = builtin(name);
    for (const auto& r : self_test(b)) EXPECT_TRUE(r.holds) << name << ": " << r.property;
  }
}

TEST(Logiclib, ProfilesMatchExpectations) {
  for (const auto& name : builtin_names()) {
    const BuiltinSpec b = builtin(name);
    if (b.supervaluation) continue;
    const auto profile = truth_level_profile(b.semantics);
    for (const auto& e : b.expected_properties) {
      const auto it = std::find_if(profile.begin(), profile.end(),
                                   [&](const PropertyReport& r) { return r.property == e.property; });
      ASSERT_NE(it, profile.end()) << name << " " << e.property;
      EXPECT_EQ(it->holds, e.holds) << name << " " << e.property;
    }
    if (b.rank_basis == "theorem") {
      StructuralProfile p;
      for (const auto& e : b.expected_properties) {
        if (e.property == "monotonic") p.monotone = e.holds;
        if (e.property == "reflexive") p.reflexive = e.holds;
        if (e.property == "transitive") p.transitive = e.holds;
        if (e.property == "permeable") p.permeable = e.holds;
      }
      EXPECT_EQ(classify_rank(p), b.expected_rank) << name;
    }
  }
}

TEST(Logiclib, OrderedSemantics) {
  const Semantics s = builtin("order-3").semantics;
  EXPECT_EQ(s.values.labels, (std::vector<std::string>{"1", "1/2", "0"}));
  ASSERT_EQ(s.relation.members.size(), 2u);
  for (const auto& m : s.relation.members) EXPECT_EQ(m.dp, m.dc);
  EXPECT_THROW(builtin("order-9"), DomainError);
}

TEST(Logiclib, NonPermeableBuiltinsArePolarized) {
  for (const auto& name : builtin_names()) {
    const BuiltinSpec b = builtin(name);
    if (b.supervaluation) continue;
    const Classification c = classify_relation(decompose_monotone(tabulate(b.semantics.relation)));
    EXPECT_TRUE(c.t_polarized && c.f_polarized) << name;
  }
}

// The shipped data files are exactly what the library serializes.
TEST(Logiclib, DataFilesMatchSerialization) {
  for (const auto& name : builtin_names()) {
    const std::string path = std::string(MVL_DATA_DIR) + "/" + name + ".json";
    EXPECT_EQ(slurp(path), dump(builtin_to_json(builtin(name)))) << path;
  }
}
