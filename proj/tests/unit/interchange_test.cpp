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

#include <filesystem>

#include "mvl/error.hpp"
#include "mvl/interchange.hpp"
#include "mvl/logiclib.hpp"

using namespace mvl;

TEST(Interchange, SemanticsRoundTrip) {
  for (const auto& name : builtin_names()) {
    const Semantics s = builtin(name).semantics;
    const Json j = semantics_to_json(s);
    const Semantics back = semantics_from_json(Json::parse(dump(j)));
    EXPECT_EQ(back.values, s.values) << name;
    EXPECT_EQ(back.truth_functions, s.truth_functions) << name;
    EXPECT_EQ(back.relation, s.relation) << name;
    EXPECT_EQ(dump(semantics_to_json(back)), dump(j)) << name;
  }
}

TEST(Interchange, TableRoundTrip) {
  const BuiltinSpec sv = builtin("supervaluationist-fragment");
  const ArgumentTable& t = sv.supervaluation->table;
  const ArgumentTable back = table_from_json(table_to_json(t));
  EXPECT_EQ(back.materialize(), t.materialize());
  const ArgumentTable e = ArgumentTable::from_verdicts({Formula::atom("p")}, {1, 0, 0, 1});
  EXPECT_EQ(table_from_json(table_to_json(e)).materialize(), e.materialize());
}

TEST(Interchange, RejectsMalformedInput) {
  EXPECT_THROW(semantics_from_json(Json::parse(R"({"values": ["1"], "relation": 3})")), DomainError);
  EXPECT_THROW(semantics_from_json(Json::parse(R"({"values": "x"})")), DomainError);
  EXPECT_THROW(relation_from_json(Json::parse(R"({"members": [{"dp": [5], "dc": []}]})"), 2), DomainError);
  EXPECT_THROW(load_json_file("/nonexistent/file.json"), IoError);
  const auto tmp = std::filesystem::temp_directory_path() / "mvl_bad.json";
  write_text_file(tmp.string(), "{ not json");
  EXPECT_THROW(load_json_file(tmp.string()), ParseError);
  std::filesystem::remove(tmp);
}

TEST(Interchange, DumpIsStable) {
  const Json a = builtin_to_json(builtin("st"));
  EXPECT_EQ(dump(a), dump(builtin_to_json(builtin("st"))));
  EXPECT_EQ(dump(a).back(), '\n');
}
