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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mvl {

struct ConnectiveSig {
  std::string name;
  int arity = 0;

  friend bool operator==(const ConnectiveSig&, const ConnectiveSig&) = default;
  friend auto operator<=>(const ConnectiveSig&, const ConnectiveSig&) = default;
};

// Names that get infix/prefix sugar in the textual grammar.
inline constexpr std::string_view kNeg = "neg";
inline constexpr std::string_view kAnd = "and";
inline constexpr std::string_view kOr = "or";
inline constexpr std::string_view kCond = "cond";

// Connective set with unique names, kept sorted by name.
class Signature {
 public:
  Signature() = default;
  Signature(std::initializer_list<ConnectiveSig> sigs);

  void add(const ConnectiveSig& c);
  const ConnectiveSig* find(std::string_view name) const;
  bool contains(const ConnectiveSig& c) const;
  const std::vector<ConnectiveSig>& connectives() const { return sigs_; }
  std::size_t size() const { return sigs_.size(); }
  bool empty() const { return sigs_.empty(); }

  // Sub-signature with only the named connectives (unknown names throw).
  Signature restrict_to(const std::vector<std::string>& names) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<ConnectiveSig> sigs_;
};

// neg/1, and/2, or/2, cond/2.
Signature standard_signature();

// Immutable formula tree. Equality and ordering follow the canonical text.
class Formula {
 public:
  static Formula atom(const std::string& name);
  static Formula apply(const ConnectiveSig& c, std::vector<Formula> args);

  bool is_atom() const;
  const std::string& atom_name() const;
  const ConnectiveSig& connective() const;
  const std::vector<Formula>& args() const;
  int depth() const;
  std::size_t size() const;  // node count
  const std::string& text() const;

  void collect_atoms(std::set<std::string>& out) const;
  std::set<std::string> atoms() const;

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.node_ == b.node_ || a.text() == b.text();
  }
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    return a.text() <=> b.text();
  }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

bool is_atom_name(std::string_view s);

Formula parse_formula(std::string_view text, const Signature& signature);
std::string format_formula(const Formula& f);

// Total on its declared atom set.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<std::string, Formula> mapping) : map_(std::move(mapping)) {}
  static Substitution identity(const std::vector<std::string>& atoms);

  const Formula* find(const std::string& atom) const;
  const std::map<std::string, Formula>& mapping() const { return map_; }

 private:
  std::map<std::string, Formula> map_;
};

Formula apply_substitution(const Formula& f, const Substitution& s);

// (second . first)(p) = apply_substitution(first(p), second).
Substitution compose(const Substitution& second, const Substitution& first);

inline constexpr std::size_t kDefaultFormulaGuard = 10000;

struct Fragment {
  std::vector<std::string> atoms;
  Signature signature;
  int depth = 0;
  std::vector<Formula> formulas;           // canonical order
  std::vector<std::vector<int>> children;  // fragment indices of direct subformulas
  std::vector<int> eval_order;             // by increasing depth

  std::size_t size() const { return formulas.size(); }
  std::optional<int> index_of(const Formula& f) const;

  std::unordered_map<std::string, int> index;
};

// Closed-form count of formulas of depth <= depth (saturates at 2^63).
std::uint64_t fragment_size(std::size_t atom_count, const Signature& signature, int depth);

Fragment generate_fragment(const std::vector<std::string>& atoms, const Signature& signature, int depth,
                           std::size_t guard = kDefaultFormulaGuard);

// Subformula closure of the given formulas, canonically ordered.
Fragment closure_fragment(const std::vector<Formula>& formulas, std::size_t guard = kDefaultFormulaGuard);

}  // namespace mvl
