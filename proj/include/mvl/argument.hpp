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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvl/bits.hpp"
#include "mvl/formula.hpp"
#include "mvl/semantics.hpp"

namespace mvl {

// Premise and conclusion sets as sorted indices into some formula list.
struct Argument {
  std::vector<int> premises;
  std::vector<int> conclusions;
  friend bool operator==(const Argument&, const Argument&) = default;
  friend auto operator<=>(const Argument&, const Argument&) = default;
};

std::string format_argument(const Argument& a, const std::vector<Formula>& formulas, bool holds);

// Failing region {(G, D) : G subset of p, D subset of n}.
struct Box {
  BitSet p;
  BitSet n;
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

bool box_contains(const Box& outer, const Box& inner);
std::vector<Box> maximal_boxes(std::vector<Box> boxes);

inline constexpr int kMaxExplicitFormulas = 12;

// A consequence relation over a finite formula list.
class ArgumentTable {
 public:
  // Monotone presentation: the failing arguments are those under some box.
  static ArgumentTable from_boxes(std::vector<Formula> formulas, std::vector<Box> boxes);
  // Explicit verdicts, index g | d << n, n <= kMaxExplicitFormulas; may be non-monotone.
  static ArgumentTable from_verdicts(std::vector<Formula> formulas, std::vector<std::uint8_t> holds);

  const std::vector<Formula>& formulas() const { return formulas_; }
  std::size_t size() const { return formulas_.size(); }
  std::optional<int> index_of(const Formula& f) const;

  bool holds(const BitSet& gamma, const BitSet& delta) const;
  bool holds(const std::vector<int>& gamma, const std::vector<int>& delta) const;
  bool holds(std::uint64_t gamma, std::uint64_t delta) const;  // needs size() <= 32

  bool monotone_presentation() const { return explicit_.empty(); }
  bool is_monotone() const;
  // Maximal failing pairs; exact for monotone tables.
  const std::vector<Box>& maximal_failing() const { return boxes_; }
  std::vector<std::uint8_t> materialize() const;

  ArgumentTable restrict_to(const std::vector<int>& keep) const;

 private:
  std::vector<Formula> formulas_;
  std::vector<Box> boxes_;
  std::vector<std::uint8_t> explicit_;
};

ArgumentTable table_from_semantics(const Semantics& s, const std::vector<Formula>& formulas);

// Per-world value-set pairs of one argument.
struct TracedArgument {
  Argument argument;
  std::vector<std::pair<ValueSet, ValueSet>> trace;
};

std::vector<TracedArgument> trace_arguments(const ValueMatrix& values, const std::vector<Argument>& arguments);

struct TruthRelationClash {
  TracedArgument failing;
  std::vector<TracedArgument> forcing;  // valid arguments whose traces force every pair of `failing`
};

struct TruthRelationResult {
  std::optional<RelationTable> relation;
  std::optional<TruthRelationClash> clash;
};

TruthRelationResult find_truth_relation(const ArgumentTable& table, const std::vector<TracedArgument>& traces,
                                        int value_count);

// All index sets of size <= k over n items, ordered by size then lexicographically.
std::vector<std::vector<int>> small_subsets(int n, int k);

}  // namespace mvl
