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

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "mvl/cli.hpp"
#include "mvl/interchange.hpp"
#include "mvl/logiclib.hpp"

using namespace mvl;

namespace {

struct CliRun {
  int code;
  std::string out;
};

// In-process run through the same entry point the binary uses.
CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str() + err.str()};
}

CliRun run_binary(const std::string& args) {
  const std::string cmd = std::string(MVL_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, ParseAndEval) {
  const CliRun r = run_cli({"parse", "p -> (q | r)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(p -> (q | r))"), std::string::npos);
  const CliRun e = run_cli({"eval", "--logic", "builtin:k3", "--world", "p=1/2", "~p"});
  EXPECT_EQ(e.code, 0) << e.out;
  EXPECT_NE(e.out.find("1/2"), std::string::npos);
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run_cli({"check", "--logic", "builtin:classical", "--properties", "monotonic,reflexive,transitive"}).code, 0);
  // Classical consequence is not permeable, so asking for everything reports a failure.
  EXPECT_EQ(run_cli({"check", "--logic", "builtin:classical", "--properties", "all"}).code, 1);
  const CliRun ts = run_cli({"check", "--logic", "builtin:ts", "--properties", "reflexive"});
  EXPECT_EQ(ts.code, 1);
  EXPECT_NE(ts.out.find("{1/2}"), std::string::npos);
}

TEST(Cli, ErrorCodes) {
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"check", "--logic", "/nonexistent.json"}).code, 3);
  EXPECT_EQ(run_cli({"parse", "(p &"}).code, 4);
  EXPECT_EQ(run_cli({"check", "--logic", "builtin:nope"}).code, 7);
  EXPECT_EQ(exit_code_for(ErrorKind::guard), 5);
  EXPECT_EQ(exit_code_for(ErrorKind::precondition), 6);
}

TEST(Cli, ReduceAndRank) {
  const CliRun tf = run_cli({"reduce", "--method", "tf", "--logic", "builtin:classical", "--fragment", "p,q", "depth=2"});
  EXPECT_EQ(tf.code, 0) << tf.out;
  EXPECT_NE(tf.out.find("0 disagreements"), std::string::npos);
  const CliRun rk = run_cli({"rank", "--logic", "builtin:mixed4", "--formulas", "#top;#hc;#bot;#hp"});
  EXPECT_EQ(rk.code, 0) << rk.out;
  EXPECT_NE(rk.out.find("rank: 4"), std::string::npos);
}

TEST(Cli, JsonOutputIsDeterministic) {
  const std::vector<std::string> args{"decompose", "--logic", "builtin:mixed4", "--format", "json"};
  const CliRun a = run_cli(args), b = run_cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW(Json::parse(a.out));
}

TEST(Cli, BinaryRanksTableFile) {
  const auto dir = std::filesystem::temp_directory_path() / "mvl_cli_test";
  std::filesystem::create_directories(dir);
  const BuiltinSpec sv = builtin("supervaluationist-fragment");
  const std::string table = (dir / "sv.json").string();
  write_text_file(table, dump(table_to_json(sv.supervaluation->table)));
  const CliRun r = run_binary("rank --table " + table + " --max-values 4");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("rank: "), std::string::npos);
  const CliRun again = run_binary("rank --table " + table + " --max-values 4");
  EXPECT_EQ(again.out, r.out);

  const CliRun ex = run_binary("export-builtins --out " + (dir / "data").string());
  EXPECT_EQ(ex.code, 0) << ex.out;
  EXPECT_TRUE(std::filesystem::exists(dir / "data" / "mixed4.json"));
  std::filesystem::remove_all(dir);
}
