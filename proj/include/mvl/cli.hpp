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

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "mvl/error.hpp"
#include "mvl/formula.hpp"
#include "mvl/reduce.hpp"

namespace mvl {

// 0 and 1 are verdicts; everything from 2 up is an error.
enum ExitCode : int {
  kExitHolds = 0,
  kExitFails = 1,
  kExitUsage = 2,
  kExitIo = 3,
  kExitParse = 4,
  kExitGuard = 5,
  kExitPrecondition = 6,
  kExitDomain = 7,
  kExitInternal = 8,
};

enum class OutputFormat { text, json };

struct RunConfig {
  std::string command;
  std::string logic;                 // "builtin:<name>" or a semantics file
  std::string table;                 // argument table file
  std::vector<std::string> formulas;
  std::vector<std::string> atoms{"p", "q"};
  std::vector<std::string> connectives;  // empty: the logic's whole signature
  int depth = 1;
  std::size_t guard_formulas = kDefaultFormulaGuard;
  std::size_t guard_worlds = kReductionWorldGuard;
  int max_values = 4;
  int max_worlds = 64;
  int members = 1;
  int max_side = 2;
  std::vector<std::string> properties{"all"};
  std::string level = "auto";        // check: auto | truth | fragment
  std::string method;                // reduce: ss | direct | tf; rank: search | constraint | tf
  std::string kind = "auto";         // decompose: auto | monotone | reflexive | transitive | tarskian
  std::vector<std::string> world;    // eval: atom=value
  std::string connective;            // regularity: one connective, or all when empty
  bool canonical = false;
  bool minimize = false;
  std::string out_dir;               // export-builtins
  OutputFormat format = OutputFormat::text;
};

// Throws Error(usage) on bad flags; `help` is set when only help text was requested.
RunConfig parse_command_line(const std::vector<std::string>& args, std::ostream& out, bool& help);

int run(const RunConfig& config, std::ostream& out);

// Parse, run, and map every exception to its exit code (message on err).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int exit_code_for(ErrorKind kind);

}  // namespace mvl
