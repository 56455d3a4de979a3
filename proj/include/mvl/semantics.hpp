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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvl/bits.hpp"
#include "mvl/formula.hpp"

namespace mvl {

inline constexpr std::size_t kWorldGuard = 1000000;
inline constexpr int kRelationGuard = 5;

struct ValueSystem {
  std::vector<std::string> labels;
  std::optional<int> one, zero, hash_p, hash_c;

  int size() const { return static_cast<int>(labels.size()); }
  ValueSet all() const { return full_set(size()); }
  std::optional<int> find(const std::string& label) const;
  std::string format(ValueSet s) const;  // "{1, 1/2}"
  void validate() const;

  friend bool operator==(const ValueSystem&, const ValueSystem&) = default;
};

// The four values of the Scott-Suszko reduction, in this index order.
namespace v4 {
inline constexpr int one = 0;
inline constexpr int hash_p = 1;
inline constexpr int hash_c = 2;
inline constexpr int zero = 3;
}  // namespace v4

ValueSystem reduction_value_system();

struct TruthFunction {
  ConnectiveSig connective;
  int value_count = 0;
  std::vector<int> table;  // row-major, last argument fastest

  int apply(const int* args) const;
  int apply(const std::vector<int>& args) const { return apply(args.data()); }
  std::size_t row_count() const { return table.size(); }
  void validate() const;

  static TruthFunction from(const ConnectiveSig& c, int value_count,
                            const std::function<int(const std::vector<int>&)>& f);
  static TruthFunction constant(const ConnectiveSig& c, int value_count, int value);

  friend bool operator==(const TruthFunction&, const TruthFunction&) = default;
};

// Decodes a table row index into its argument tuple.
std::vector<int> decode_row(std::size_t row, int arity, int value_count);

struct MixedRelation {
  ValueSet dp = 0;
  ValueSet dc = 0;

  friend bool operator==(const MixedRelation&, const MixedRelation&) = default;
  friend auto operator<=>(const MixedRelation&, const MixedRelation&) = default;
};

// gamma |= delta iff gamma is not inside dp, or delta meets dc.
inline bool holds_mixed(const MixedRelation& r, ValueSet gamma, ValueSet delta) {
  return !subset_of(gamma, r.dp) || (delta & r.dc) != 0;
}
// Checked variant: throws when a set leaves V.
bool holds_mixed(const MixedRelation& r, ValueSet gamma, ValueSet delta, int value_count);

struct IntersectiveRelation {
  int value_count = 0;
  std::vector<MixedRelation> members;  // empty = universal

  void validate() const;
  friend bool operator==(const IntersectiveRelation&, const IntersectiveRelation&) = default;
};

bool holds_intersective(const IntersectiveRelation& r, ValueSet gamma, ValueSet delta);

// Extensional relation over P(V)^2, index gamma | delta << n.
class RelationTable {
 public:
  RelationTable() = default;
  RelationTable(int value_count, bool fill);

  int value_count() const { return n_; }
  ValueSet all() const { return full_set(n_); }
  std::size_t pair_count() const { return bits_.size(); }
  bool holds(ValueSet gamma, ValueSet delta) const { return bits_[gamma | (std::size_t{delta} << n_)]; }
  void set(ValueSet gamma, ValueSet delta, bool v) { bits_[gamma | (std::size_t{delta} << n_)] = v; }
  bool at(std::size_t index) const { return bits_[index]; }
  void set_at(std::size_t index, bool v) { bits_[index] = v; }

  friend bool operator==(const RelationTable&, const RelationTable&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> bits_;
};

void check_relation_guard(int value_count, int guard = kRelationGuard);
RelationTable tabulate(const IntersectiveRelation& r, int guard = 12);

struct MemberClass {
  bool p_mixed = false;
  bool q_mixed = false;
  bool pure = false;
};

struct Classification {
  std::vector<MemberClass> members;
  bool all_p_mixed = true;
  bool all_q_mixed = true;
  bool all_pure = true;
  bool t_polarized = false;
  bool f_polarized = false;
};

Classification classify_relation(const IntersectiveRelation& r);

// Total map from atom names and (optionally) canonical formula texts to values.
struct World {
  std::map<std::string, int> values;
  friend bool operator==(const World&, const World&) = default;
};

struct Semantics {
  ValueSystem values;
  Signature signature;
  std::map<std::string, TruthFunction> truth_functions;
  IntersectiveRelation relation;
  bool valuational = false;  // worlds = all valuations over the atoms in use
  std::vector<World> worlds;

  const TruthFunction* truth_function(const std::string& name) const;
  std::vector<World> worlds_over(const std::vector<std::string>& atoms, std::size_t guard = kWorldGuard) const;
  void validate() const;
};

int evaluate(const Semantics& s, const Formula& f, const World& w);
// Index into s.worlds, or into worlds_over(atoms of f) for a valuational semantics.
int evaluate(const Semantics& s, const Formula& f, std::size_t world_index);

// values(w, i) for every world and every formula of a fragment.
struct ValueMatrix {
  std::size_t world_count = 0;
  std::size_t formula_count = 0;
  std::vector<std::uint8_t> data;
  int operator()(std::size_t w, std::size_t i) const { return data[w * formula_count + i]; }
};

ValueMatrix evaluate_fragment(const Semantics& s, const Fragment& frag, std::size_t world_guard = kWorldGuard);
ValueMatrix evaluate_formulas(const Semantics& s, const std::vector<Formula>& formulas,
                              std::size_t world_guard = kWorldGuard);

bool consequence(const Semantics& s, const std::vector<Formula>& gamma, const std::vector<Formula>& delta);

}  // namespace mvl
