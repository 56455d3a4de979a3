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

#include "mvl/formula.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "mvl/error.hpp"

namespace mvl {

// ---------------------------------------------------------------- signature

Signature::Signature(std::initializer_list<ConnectiveSig> sigs) {
  for (const auto& c : sigs) add(c);
}

void Signature::add(const ConnectiveSig& c) {
  if (c.arity < 0) throw DomainError("negative arity for connective '" + c.name + "'");
  if (c.name.empty()) throw DomainError("empty connective name");
  auto it = std::lower_bound(sigs_.begin(), sigs_.end(), c.name,
                             [](const ConnectiveSig& a, const std::string& n) { return a.name < n; });
  if (it != sigs_.end() && it->name == c.name) throw DomainError("duplicate connective '" + c.name + "'");
  sigs_.insert(it, c);
}

const ConnectiveSig* Signature::find(std::string_view name) const {
  auto it = std::lower_bound(sigs_.begin(), sigs_.end(), name,
                             [](const ConnectiveSig& a, std::string_view n) { return a.name < n; });
  if (it != sigs_.end() && it->name == name) return &*it;
  return nullptr;
}

bool Signature::contains(const ConnectiveSig& c) const {
  const auto* f = find(c.name);
  return f && f->arity == c.arity;
}

Signature Signature::restrict_to(const std::vector<std::string>& names) const {
  Signature out;
  for (const auto& n : names) {
    const auto* c = find(n);
    if (!c) throw DomainError("unknown connective '" + n + "'");
    out.add(*c);
  }
  return out;
}

Signature standard_signature() {
  return Signature{{std::string(kNeg), 1}, {std::string(kAnd), 2}, {std::string(kOr), 2}, {std::string(kCond), 2}};
}

// ---------------------------------------------------------------- formula

struct Formula::Node {
  bool atom = true;
  std::string name;  // atom name
  ConnectiveSig conn;
  std::vector<Formula> args;
  int depth = 0;
  std::size_t size = 1;
  std::string text;
};

namespace {

const char* infix_symbol(const ConnectiveSig& c) {
  if (c.arity != 2) return nullptr;
  if (c.name == kAnd) return "&";
  if (c.name == kOr) return "|";
  if (c.name == kCond) return "->";
  return nullptr;
}

std::string render(const ConnectiveSig& c, const std::vector<Formula>& args) {
  if (c.arity == 0) return "#" + c.name;
  if (c.arity == 1 && c.name == kNeg) return "~" + args[0].text();
  if (const char* sym = infix_symbol(c)) return "(" + args[0].text() + " " + sym + " " + args[1].text() + ")";
  std::string s = c.name + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ", ";
    s += args[i].text();
  }
  return s + ")";
}

bool is_connective_name(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::islower(static_cast<unsigned char>(ch)) || std::isdigit(static_cast<unsigned char>(ch)) ||
           ch == '_';
  });
}

}  // namespace

bool is_atom_name(std::string_view s) {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) { return (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9'); });
}

Formula Formula::atom(const std::string& name) {
  if (!is_atom_name(name)) throw DomainError("invalid atom name '" + name + "'");
  auto n = std::make_shared<Node>();
  n->name = name;
  n->text = name;
  return Formula(std::move(n));
}

Formula Formula::apply(const ConnectiveSig& c, std::vector<Formula> args) {
  if (static_cast<int>(args.size()) != c.arity)
    throw DomainError("arity mismatch for '" + c.name + "': expected " + std::to_string(c.arity) + ", got " +
                      std::to_string(args.size()));
  if (!is_connective_name(c.name)) throw DomainError("invalid connective name '" + c.name + "'");
  auto n = std::make_shared<Node>();
  n->atom = false;
  n->conn = c;
  n->args = std::move(args);
  for (const auto& a : n->args) {
    n->depth = std::max(n->depth, a.depth() + 1);
    n->size += a.size();
  }
  n->text = render(n->conn, n->args);
  return Formula(std::move(n));
}

bool Formula::is_atom() const { return node_->atom; }
const std::string& Formula::atom_name() const { return node_->name; }
const ConnectiveSig& Formula::connective() const { return node_->conn; }
const std::vector<Formula>& Formula::args() const { return node_->args; }
int Formula::depth() const { return node_->depth; }
std::size_t Formula::size() const { return node_->size; }
const std::string& Formula::text() const { return node_->text; }

void Formula::collect_atoms(std::set<std::string>& out) const {
  if (is_atom()) {
    out.insert(atom_name());
    return;
  }
  for (const auto& a : args()) a.collect_atoms(out);
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  collect_atoms(out);
  return out;
}

std::string format_formula(const Formula& f) { return f.text(); }

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : s_(text), sig_(sig) {}

  Formula parse_top() {
    Formula f = parse_formula();
    skip_ws();
    // An outermost binary formula may omit its parentheses.
    if (!at_end() && peek_op()) {
      const ConnectiveSig& c = read_op();
      Formula g = parse_formula();
      f = Formula::apply(c, {f, g});
    }
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool at_end() const { return pos_ >= s_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek_op() const {
    if (at_end()) return false;
    char ch = s_[pos_];
    return ch == '&' || ch == '|' || (ch == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>');
  }

  const ConnectiveSig& lookup(std::string_view name, int arity, std::size_t at) {
    const ConnectiveSig* c = sig_.find(name);
    if (!c) throw ParseError("unknown connective '" + std::string(name) + "'", at);
    if (c->arity != arity)
      throw ParseError("arity mismatch for '" + std::string(name) + "': declared " + std::to_string(c->arity) +
                           ", used with " + std::to_string(arity),
                       at);
    return *c;
  }

  const ConnectiveSig& read_op() {
    std::size_t at = pos_;
    char ch = s_[pos_];
    if (ch == '&') {
      ++pos_;
      return lookup(kAnd, 2, at);
    }
    if (ch == '|') {
      ++pos_;
      return lookup(kOr, 2, at);
    }
    pos_ += 2;
    return lookup(kCond, 2, at);
  }

  std::string read_ident() {
    std::size_t start = pos_;
    while (!at_end()) {
      char ch = s_[pos_];
      if (std::islower(static_cast<unsigned char>(ch)) || std::isdigit(static_cast<unsigned char>(ch)) || ch == '_')
        ++pos_;
      else
        break;
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  Formula parse_formula() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    std::size_t at = pos_;
    char ch = s_[pos_];
    if (ch == '~') {
      ++pos_;
      const ConnectiveSig& c = lookup(kNeg, 1, at);
      return Formula::apply(c, {parse_formula()});
    }
    if (ch == '#') {
      ++pos_;
      std::string name = read_ident();
      if (name.empty()) fail("expected constant name after '#'");
      return Formula::apply(lookup(name, 0, at), {});
    }
    if (ch == '(') {
      ++pos_;
      Formula left = parse_formula();
      skip_ws();
      if (!at_end() && s_[pos_] == ')') {  // redundant parentheses
        ++pos_;
        return left;
      }
      if (!peek_op()) fail("expected '&', '|', '->' or ')'");
      const ConnectiveSig& c = read_op();
      Formula right = parse_formula();
      skip_ws();
      if (at_end() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return Formula::apply(c, {left, right});
    }
    if (std::islower(static_cast<unsigned char>(ch))) {
      std::string name = read_ident();
      std::size_t after = pos_;
      skip_ws();
      if (!at_end() && s_[pos_] == '(') {
        ++pos_;
        std::vector<Formula> args;
        skip_ws();
        if (!at_end() && s_[pos_] == ')') {
          ++pos_;
        } else {
          while (true) {
            args.push_back(parse_formula());
            skip_ws();
            if (at_end()) fail("expected ',' or ')'");
            if (s_[pos_] == ',') {
              ++pos_;
              continue;
            }
            if (s_[pos_] == ')') {
              ++pos_;
              break;
            }
            fail("expected ',' or ')'");
          }
        }
        const ConnectiveSig& c = lookup(name, static_cast<int>(args.size()), at);
        return Formula::apply(c, std::move(args));
      }
      pos_ = after;
      if (!is_atom_name(name)) throw ParseError("invalid atom name '" + name + "'", at);
      return Formula::atom(name);
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  std::string_view s_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& signature) {
  return Parser(text, signature).parse_top();
}

// ---------------------------------------------------------------- substitution

Substitution Substitution::identity(const std::vector<std::string>& atoms) {
  std::map<std::string, Formula> m;
  for (const auto& a : atoms) m.emplace(a, Formula::atom(a));
  return Substitution(std::move(m));
}

const Formula* Substitution::find(const std::string& atom) const {
  auto it = map_.find(atom);
  return it == map_.end() ? nullptr : &it->second;
}

Formula apply_substitution(const Formula& f, const Substitution& s) {
  if (f.is_atom()) {
    const Formula* img = s.find(f.atom_name());
    if (!img) throw DomainError("atom '" + f.atom_name() + "' outside the substitution's domain");
    return *img;
  }
  if (f.args().empty()) return f;
  std::vector<Formula> args;
  args.reserve(f.args().size());
  for (const auto& a : f.args()) args.push_back(apply_substitution(a, s));
  return Formula::apply(f.connective(), std::move(args));
}

Substitution compose(const Substitution& second, const Substitution& first) {
  std::map<std::string, Formula> m;
  for (const auto& [atom, img] : first.mapping()) m.emplace(atom, apply_substitution(img, second));
  return Substitution(std::move(m));
}

// ---------------------------------------------------------------- fragments

std::optional<int> Fragment::index_of(const Formula& f) const {
  auto it = index.find(f.text());
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::uint64_t fragment_size(std::size_t atom_count, const Signature& signature, int depth) {
  constexpr std::uint64_t cap = std::uint64_t{1} << 63;
  auto sat_mul = [&](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
    if (a == 0 || b == 0) return 0;
    if (a > cap / b) return cap;
    return a * b;
  };
  auto sat_add = [&](std::uint64_t a, std::uint64_t b) -> std::uint64_t { return a > cap - b ? cap : a + b; };

  std::uint64_t base = atom_count;
  for (const auto& c : signature.connectives())
    if (c.arity == 0) base = sat_add(base, 1);
  std::uint64_t prev = base;
  for (int d = 1; d <= depth; ++d) {
    std::uint64_t next = base;
    for (const auto& c : signature.connectives()) {
      if (c.arity == 0) continue;
      std::uint64_t term = 1;
      for (int k = 0; k < c.arity; ++k) term = sat_mul(term, prev);
      next = sat_add(next, term);
    }
    prev = next;
  }
  return prev;
}

namespace {

Fragment index_fragment(std::vector<Formula> formulas) {
  Fragment fr;
  std::sort(formulas.begin(), formulas.end());
  formulas.erase(std::unique(formulas.begin(), formulas.end()), formulas.end());
  fr.formulas = std::move(formulas);
  for (std::size_t i = 0; i < fr.formulas.size(); ++i) fr.index.emplace(fr.formulas[i].text(), static_cast<int>(i));
  fr.children.resize(fr.formulas.size());
  for (std::size_t i = 0; i < fr.formulas.size(); ++i) {
    const Formula& f = fr.formulas[i];
    if (f.is_atom()) continue;
    for (const auto& a : f.args()) {
      auto it = fr.index.find(a.text());
      if (it == fr.index.end()) throw DomainError("fragment is not subformula-closed at '" + f.text() + "'");
      fr.children[i].push_back(it->second);
    }
  }
  fr.eval_order.resize(fr.formulas.size());
  for (std::size_t i = 0; i < fr.eval_order.size(); ++i) fr.eval_order[i] = static_cast<int>(i);
  std::stable_sort(fr.eval_order.begin(), fr.eval_order.end(),
                   [&](int a, int b) { return fr.formulas[a].depth() < fr.formulas[b].depth(); });
  return fr;
}

void enumerate_tuples(const std::vector<Formula>& pool, int arity, std::vector<Formula>& cur,
                      const ConnectiveSig& c, std::vector<Formula>& out) {
  if (static_cast<int>(cur.size()) == arity) {
    out.push_back(Formula::apply(c, cur));
    return;
  }
  for (const auto& f : pool) {
    cur.push_back(f);
    enumerate_tuples(pool, arity, cur, c, out);
    cur.pop_back();
  }
}

}  // namespace

Fragment generate_fragment(const std::vector<std::string>& atoms, const Signature& signature, int depth,
                           std::size_t guard) {
  if (depth < 0) throw DomainError("fragment depth must be non-negative");
  bool has_constant = std::any_of(signature.connectives().begin(), signature.connectives().end(),
                                  [](const ConnectiveSig& c) { return c.arity == 0; });
  if (atoms.empty() && !has_constant) throw DomainError("fragment needs atoms or 0-ary connectives");
  std::set<std::string> atom_set(atoms.begin(), atoms.end());
  if (atom_set.size() != atoms.size()) throw DomainError("duplicate atom in fragment specification");

  std::uint64_t expected = fragment_size(atom_set.size(), signature, depth);
  if (expected > guard)
    throw GuardError("fragment has " + std::to_string(expected) + " formulas, above the guard of " +
                     std::to_string(guard));

  std::vector<Formula> base;
  for (const auto& a : atom_set) base.push_back(Formula::atom(a));
  for (const auto& c : signature.connectives())
    if (c.arity == 0) base.push_back(Formula::apply(c, {}));

  // Depth <= d formulas are exactly base plus connective applications over depth <= d-1.
  std::vector<Formula> prev = base;
  for (int d = 1; d <= depth; ++d) {
    std::vector<Formula> next = base;
    for (const auto& c : signature.connectives()) {
      if (c.arity == 0) continue;
      std::vector<Formula> cur;
      enumerate_tuples(prev, c.arity, cur, c, next);
    }
    prev = std::move(next);
  }

  Fragment fr = index_fragment(std::move(prev));
  fr.atoms.assign(atom_set.begin(), atom_set.end());
  fr.signature = signature;
  fr.depth = depth;
  if (fr.formulas.size() != expected)
    throw DomainError("fragment enumeration disagrees with the closed-form count");
  return fr;
}

Fragment closure_fragment(const std::vector<Formula>& formulas, std::size_t guard) {
  std::set<std::string> seen;
  std::vector<Formula> all;
  std::set<std::string> atoms;
  Signature sig;
  int depth = 0;
  std::vector<Formula> stack(formulas.begin(), formulas.end());
  while (!stack.empty()) {
    Formula f = stack.back();
    stack.pop_back();
    if (!seen.insert(f.text()).second) continue;
    if (seen.size() > guard) throw GuardError("formula closure exceeds the guard of " + std::to_string(guard));
    all.push_back(f);
    depth = std::max(depth, f.depth());
    if (f.is_atom()) {
      atoms.insert(f.atom_name());
      continue;
    }
    const auto* known = sig.find(f.connective().name);
    if (!known)
      sig.add(f.connective());
    else if (known->arity != f.connective().arity)
      throw DomainError("connective '" + f.connective().name + "' used with two arities");
    for (const auto& a : f.args()) stack.push_back(a);
  }
  Fragment fr = index_fragment(std::move(all));
  fr.atoms.assign(atoms.begin(), atoms.end());
  fr.signature = sig;
  fr.depth = depth;
  return fr;
}

}  // namespace mvl
