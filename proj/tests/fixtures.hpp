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

#pragma once

#include <string>
#include <vector>

#include "mvl/semantics.hpp"
#include "mvl/structure.hpp"

namespace fixtures {

// Classical connectives over {1, a, b, 0}, where a and b behave like 1 for the
// connectives and the relation ({1, a, b}, {1, a, b}) cannot tell them apart.
inline mvl::Semantics collapse_example() {
  using namespace mvl;
  Semantics s;
  s.values.labels = {"1", "a", "b", "0"};
  s.values.one = 0;
  s.values.zero = 3;
  s.signature = standard_signature();
  auto t = [](int x) { return x != 3; };
  auto v = [](bool b) { return b ? 0 : 3; };
  s.truth_functions["neg"] = TruthFunction::from({"neg", 1}, 4, [&](const std::vector<int>& a) { return v(!t(a[0])); });
  s.truth_functions["and"] =
      TruthFunction::from({"and", 2}, 4, [&](const std::vector<int>& a) { return v(t(a[0]) && t(a[1])); });
  s.truth_functions["or"] =
      TruthFunction::from({"or", 2}, 4, [&](const std::vector<int>& a) { return v(t(a[0]) || t(a[1])); });
  s.truth_functions["cond"] =
      TruthFunction::from({"cond", 2}, 4, [&](const std::vector<int>& a) { return v(!t(a[0]) || t(a[1])); });
  s.relation = {4, {{0b0111, 0b0111}}};
  s.valuational = true;
  return s;
}

// Canonical four-valued tables of the example rules, values ordered 1, #p, #c, 0 and
// rows indexed by the first argument.
struct GoldenTable {
  const char* name;
  int arity;
  mvl::RegularityRules rules;
  std::vector<int> table;
};

inline std::vector<GoldenTable> golden_tables() {
  return {
      {"neg", 1, {{{0, 1}}, {{1, 0}}}, {3, 1, 2, 0}},
      {"and", 2, {{{3, 0}}, {{0, 1}, {0, 2}}}, {0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3}},
      {"or", 2, {{{1, 0}, {2, 0}}, {{0, 3}}}, {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3}},
      {"cond", 2, {{{2, 0}, {0, 1}}, {{1, 2}}}, {0, 1, 2, 3, 0, 1, 0, 1, 0, 0, 2, 2, 0, 0, 0, 0}},
  };
}

inline std::vector<mvl::Formula> parse_all(const std::vector<std::string>& texts, const mvl::Signature& sig) {
  std::vector<mvl::Formula> out;
  for (const auto& t : texts) out.push_back(mvl::parse_formula(t, sig));
  return out;
}

}  // namespace fixtures
