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

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "mvl/cli.hpp"
#include "mvl/kernels.hpp"

int main(int argc, char** argv) {
  if (const char* t = std::getenv("MVL_THREADS")) {
    try {
      mvl::set_thread_limit(std::stoi(t));
    } catch (const std::exception&) {
      std::cerr << "mvl: MVL_THREADS must be an integer\n";
      return mvl::kExitUsage;
    }
  }
  std::vector<std::string> args(argv + 1, argv + argc);
  return mvl::cli_main(args, std::cout, std::cerr);
}
