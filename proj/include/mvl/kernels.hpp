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
#include <cstdint>
#include <optional>
#include <vector>

#include "mvl/argument.hpp"
#include "mvl/semantics.hpp"

namespace mvl {

// How exhaustive loops run. The serial path is the reference implementation.
enum class Exec { serial, parallel };

// Caps OpenMP threads (MVL_THREADS); n <= 0 leaves the runtime default.
void set_thread_limit(int n);
int thread_limit();

// Verdicts as box membership masks: formula f is in box b's premise region
// when bit b of p_mask(f) is set, and in its conclusion region for n_mask(f).
// An argument fails iff the AND of its premises' p masks and its
// conclusions' n masks is non-zero.
struct BoxModel {
  std::size_t formula_count = 0;
  std::size_t box_count = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> in_p;
  std::vector<std::uint64_t> in_n;

  const std::uint64_t* p_mask(std::size_t f) const { return &in_p[f * words]; }
  const std::uint64_t* n_mask(std::size_t f) const { return &in_n[f * words]; }
  bool fails(const std::vector<int>& premises, const std::vector<int>& conclusions) const;

  // One box per (world, member): premise side = value in dp, conclusion side = value outside dc.
  static BoxModel from_values(const ValueMatrix& values, const IntersectiveRelation& r);
  static BoxModel from_boxes(std::size_t formula_count, const std::vector<Box>& boxes);
};

enum class VerdictMode {
  equal,    // count arguments where the verdicts differ
  implies,  // count arguments that hold in the first model but fail in the second
};

struct AgreementResult {
  std::uint64_t arguments = 0;     // raw arguments covered: (sum_j C(n, j))^2
  std::uint64_t evaluations = 0;   // distinct class-level arguments evaluated
  std::uint64_t disagreements = 0; // class-level count
  std::optional<Argument> first;   // canonical first disagreement (least class indices)
  bool agree() const { return disagreements == 0; }
};

// All arguments with at most max_side premises and max_side conclusions.
// Formulas with identical masks in both models are merged first.
AgreementResult compare_verdicts(const BoxModel& a, const BoxModel& b, int max_side,
                                 VerdictMode mode = VerdictMode::equal, Exec exec = Exec::parallel);

// Naive per-argument loop over raw formula subsets; kept to test the kernel above.
AgreementResult compare_verdicts_reference(const BoxModel& a, const BoxModel& b, int max_side,
                                           VerdictMode mode = VerdictMode::equal);

std::uint64_t binomial_prefix(std::uint64_t n, int k);

}  // namespace mvl
