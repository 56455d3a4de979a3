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

#include "mvl/rank.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "mvl/decompose.hpp"
#include "mvl/error.hpp"
#include "mvl/kernels.hpp"

namespace mvl {

int classify_rank(const StructuralProfile& p) {
  if (!p.monotone) throw PreconditionError("rank classification needs a monotonic relation");
  if (p.permeable) throw PreconditionError("rank classification needs a non-permeable relation");
  if (p.reflexive && p.transitive) return 2;
  if (p.reflexive || p.transitive) return 3;
  return 4;
}

namespace {

void collect_signature(const Formula& f, Signature& sig) {
  if (f.is_atom()) return;
  if (!sig.contains(f.connective())) sig.add(f.connective());
  for (const auto& a : f.args()) collect_signature(a, sig);
}

// Value type w.r.t. one member: bit 1 = in dp, bit 0 = in dc.
constexpr bool t_dp(int t) { return (t & 2) != 0; }
constexpr bool t_dc(int t) { return (t & 1) != 0; }
constexpr const char* kTypeLabel[4] = {"0", "#c", "#p", "1"};

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Non-decreasing sequences of length k over [0, codes): value permutations quotiented.
std::vector<std::vector<int>> shapes(int codes, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == codes - 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[i];
  }
  return out;
}

std::uint64_t multiset_count(std::uint64_t codes, int k) {
  // C(codes + k - 1, k)
  std::uint64_t c = 1;
  for (int j = 1; j <= k; ++j) c = c * (codes + j - 1) / j;
  return c;
}

struct OracleContext {
  int n = 0;
  int members = 1;
  std::vector<std::uint8_t> downfail;   // pair index g | d << n: it and every sub-pair fail
  std::vector<std::uint32_t> maximal;   // maximal failing pair indices, ascending
};

struct ShapeHit {
  int worlds = 0;
  std::vector<std::vector<int>> assignments;  // per world: value per formula
};

struct SoundWorld {
  std::vector<int> assignment;
  std::vector<std::uint64_t> covers;  // bit i: covers maximal pair i
};

std::optional<ShapeHit> solve_shape(const std::vector<int>& shape, const OracleContext& cx, int max_worlds) {
  const int k = static_cast<int>(shape.size());
  const int n = cx.n;
  const std::size_t M = cx.maximal.size();
  const std::size_t mw = std::max<std::size_t>(1, (M + 63) / 64);
  if (M == 0) return ShapeHit{0, {}};

  std::vector<SoundWorld> sound;
  std::set<std::vector<std::uint32_t>> seen;
  const std::uint64_t total = ipow(k, n);
  std::vector<int> a(n, 0);
  for (std::uint64_t x = 0; x < total; ++x) {
    std::uint64_t rest = x;
    for (int f = n - 1; f >= 0; --f) {
      a[f] = static_cast<int>(rest % k);
      rest /= k;
    }
    std::vector<std::uint32_t> boxes;
    bool ok = true;
    for (int l = 0; l < cx.members && ok; ++l) {
      std::uint32_t p = 0, q = 0;
      for (int f = 0; f < n; ++f) {
        const int t = (shape[a[f]] >> (2 * l)) & 3;
        if (t_dp(t)) p |= 1u << f;
        if (!t_dc(t)) q |= 1u << f;
      }
      const std::uint32_t idx = p | (q << n);
      ok = cx.downfail[idx] != 0;
      boxes.push_back(idx);
    }
    if (!ok) continue;
    std::sort(boxes.begin(), boxes.end());
    boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
    if (!seen.insert(boxes).second) continue;
    SoundWorld w{a, std::vector<std::uint64_t>(mw, 0)};
    bool any = false;
    for (std::size_t i = 0; i < M; ++i)
      for (auto b : boxes)
        if ((b & cx.maximal[i]) == cx.maximal[i]) {
          w.covers[i >> 6] |= std::uint64_t{1} << (i & 63);
          any = true;
          break;
        }
    if (any) sound.push_back(std::move(w));
  }

  std::vector<std::size_t> chosen;
  std::vector<std::uint64_t> covered(mw, 0);
  auto covered_bit = [&](std::size_t i) { return (covered[i >> 6] >> (i & 63)) & 1u; };

  // Depth-first: cover the first uncovered maximal pair, trying sound worlds in order.
  auto dfs = [&](auto&& self, int budget) -> bool {
    std::size_t first = M;
    for (std::size_t i = 0; i < M; ++i)
      if (!covered_bit(i)) {
        first = i;
        break;
      }
    if (first == M) return true;
    if (budget == 0) return false;
    for (std::size_t w = 0; w < sound.size(); ++w) {
      if (!((sound[w].covers[first >> 6] >> (first & 63)) & 1u)) continue;
      const auto saved = covered;
      for (std::size_t j = 0; j < mw; ++j) covered[j] |= sound[w].covers[j];
      chosen.push_back(w);
      if (self(self, budget - 1)) return true;
      chosen.pop_back();
      covered = saved;
    }
    return false;
  };

  for (int W = 1; W <= max_worlds; ++W) {
    chosen.clear();
    std::fill(covered.begin(), covered.end(), 0);
    if (dfs(dfs, W)) {
      ShapeHit hit;
      hit.worlds = static_cast<int>(chosen.size());
      for (auto w : chosen) hit.assignments.push_back(sound[w].assignment);
      return hit;
    }
  }
  return std::nullopt;
}

Semantics oracle_witness(const std::vector<int>& shape, const ShapeHit& hit, const std::vector<Formula>& formulas,
                         int members) {
  Semantics s;
  const int k = static_cast<int>(shape.size());
  if (members == 1) {
    int dup[4] = {0, 0, 0, 0};
    for (int c : shape) {
      std::string label = kTypeLabel[c];
      for (int i = 0; i < dup[c]; ++i) label += "'";
      if (dup[c]++ == 0) {
        const int v = s.values.size();
        if (c == 3) s.values.one = v;
        if (c == 0) s.values.zero = v;
        if (c == 2) s.values.hash_p = v;
        if (c == 1) s.values.hash_c = v;
      }
      s.values.labels.push_back(label);
    }
  } else {
    for (int v = 0; v < k; ++v) s.values.labels.push_back("v" + std::to_string(v + 1));
  }
  s.relation.value_count = k;
  for (int l = 0; l < members; ++l) {
    MixedRelation m;
    for (int v = 0; v < k; ++v) {
      const int t = (shape[v] >> (2 * l)) & 3;
      if (t_dp(t)) m.dp |= singleton(v);
      if (t_dc(t)) m.dc |= singleton(v);
    }
    s.relation.members.push_back(m);
  }
  for (const auto& f : formulas) collect_signature(f, s.signature);
  for (const auto& a : hit.assignments) {
    World w;
    for (std::size_t f = 0; f < formulas.size(); ++f) w.values[formulas[f].text()] = a[f];
    s.worlds.push_back(std::move(w));
  }
  return s;
}

std::string shape_text(const std::vector<int>& shape, int members) {
  std::string s = "(";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) s += ", ";
    if (members == 1) {
      s += kTypeLabel[shape[i]];
    } else {
      s += "[";
      for (int l = 0; l < members; ++l) s += (l ? " " : "") + std::string(kTypeLabel[(shape[i] >> (2 * l)) & 3]);
      s += "]";
    }
  }
  return s + ")";
}

}  // namespace

RankCertificate brute_force_rank(const ArgumentTable& table, int max_values, int max_worlds, int members,
                                 std::uint64_t guard) {
  const std::size_t n = table.size();
  if (n > kRankFormulaLimit)
    throw GuardError("rank search needs at most " + std::to_string(kRankFormulaLimit) + " formulas, got " +
                     std::to_string(n));
  if (members < 1 || members > 3) throw DomainError("rank search supports 1 to 3 members");
  if (max_values < 1 || max_values > 4) throw DomainError("rank search supports 1 to 4 values");
  if (max_worlds < 0) throw DomainError("max_worlds must be non-negative");

  const std::uint64_t codes = ipow(4, members);
  std::uint64_t cardinality = 0;
  for (int k = 1; k <= max_values; ++k) cardinality += multiset_count(codes, k) * ipow(k, static_cast<int>(n));
  if (cardinality > guard)
    throw GuardError("rank search space has " + std::to_string(cardinality) + " (shape, world) candidates, over the guard of " +
                     std::to_string(guard));

  OracleContext cx;
  cx.n = static_cast<int>(n);
  cx.members = members;
  const auto verdicts = table.materialize();
  cx.downfail.assign(verdicts.size(), 0);
  for (std::size_t idx = 0; idx < verdicts.size(); ++idx) {
    bool ok = verdicts[idx] == 0;
    for (std::size_t b = 0; ok && b < 2 * n; ++b)
      if ((idx >> b) & 1u) ok = cx.downfail[idx ^ (std::size_t{1} << b)] != 0;
    cx.downfail[idx] = ok;
  }
  for (std::size_t idx = 0; idx < verdicts.size(); ++idx) {
    if (verdicts[idx]) continue;
    bool maximal = true;
    for (std::size_t b = 0; maximal && b < 2 * n; ++b)
      if (!((idx >> b) & 1u) && !verdicts[idx | (std::size_t{1} << b)]) maximal = false;
    if (maximal) cx.maximal.push_back(static_cast<std::uint32_t>(idx));
  }

  RankCertificate cert;
  cert.members = members;
  cert.proof = LowerBoundProof::exhausted_search;
  cert.steps.push_back(std::to_string(n) + " formulas, " + std::to_string(cx.maximal.size()) +
                       " maximal failing arguments, at most " + std::to_string(max_worlds) + " worlds");

  for (int k = 1; k <= max_values; ++k) {
    const auto sh = shapes(static_cast<int>(codes), k);
    const std::int64_t S = static_cast<std::int64_t>(sh.size());
    std::vector<std::optional<ShapeHit>> hits(sh.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < S; ++i) hits[i] = solve_shape(sh[i], cx, max_worlds);

    // Canonical order: fewest worlds first, then the earliest shape.
    std::optional<std::size_t> best;
    std::uint64_t refuted = 0;
    for (std::size_t i = 0; i < sh.size(); ++i) {
      if (!hits[i]) {
        ++refuted;
        continue;
      }
      if (!best || hits[i]->worlds < hits[*best]->worlds) best = i;
    }
    cert.refutations.push_back(refuted);
    if (!best) {
      cert.steps.push_back("k = " + std::to_string(k) + ": all " + std::to_string(sh.size()) +
                           " value shapes refuted");
      cert.lower_bound = k + 1;
      continue;
    }
    Semantics w = oracle_witness(sh[*best], *hits[*best], table.formulas(), members);
    if (table_from_semantics(w, table.formulas()).materialize() != verdicts)
      throw std::logic_error("rank witness does not reproduce the table");
    cert.steps.push_back("k = " + std::to_string(k) + ": shape " + shape_text(sh[*best], members) +
                         " reproduces the table with " + std::to_string(hits[*best]->worlds) + " worlds (" +
                         std::to_string(refuted) + " of " + std::to_string(sh.size()) + " shapes refuted)");
    cert.rank = k;
    cert.lower_bound = k;
    cert.witness = std::move(w);
    return cert;
  }
  cert.steps.push_back("no semantics with at most " + std::to_string(max_values) + " values and " +
                       std::to_string(max_worlds) + " worlds");
  return cert;
}

RankCertificate brute_force_mixed_rank(const ArgumentTable& table, int max_values, int max_worlds) {
  return brute_force_rank(table, max_values, max_worlds, 1);
}

// ---------------------------------------------------------------- constraint table

namespace {

enum Prop : unsigned {
  kAllDc = 1,      // |- F
  kNoDp = 2,       // F |-
  kSomeNotDc = 4,  // |/- F
  kSomeDp = 8,     // F |/-
  kPNotC = 16,     // F |/- F
  kRefl = 32,      // F |- F
};

constexpr std::pair<unsigned, unsigned> kClash[] = {
    {kAllDc, kSomeNotDc}, {kNoDp, kSomeDp}, {kNoDp, kPNotC}, {kAllDc, kPNotC}, {kRefl, kPNotC},
};

bool clashes(unsigned a, unsigned b) {
  for (auto [x, y] : kClash)
    if (((a & x) && (b & y)) || ((a & y) && (b & x))) return true;
  return false;
}

std::string describe(unsigned props) {
  std::vector<std::string> parts;
  if (props & kAllDc) parts.push_back("in every Dc");
  if (props & kNoDp) parts.push_back("outside every Dp");
  if (props & kRefl) parts.push_back("in each Dc whose Dp holds it");
  if (props & kPNotC) parts.push_back("in some Dp but not in its Dc");
  if (props & kSomeDp && !(props & kPNotC)) parts.push_back("in some Dp");
  if (props & kSomeNotDc && !(props & kPNotC)) parts.push_back("outside some Dc");
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s;
}

std::string first_clash(unsigned a, unsigned b) {
  for (auto [x, y] : kClash) {
    if ((a & x) && (b & y)) return describe(x) + " vs " + describe(y);
    if ((a & y) && (b & x)) return describe(y) + " vs " + describe(x);
  }
  return "";
}

struct ValueWitness {
  int formula;
  unsigned props;
  std::string source;
};

}  // namespace

RankCertificate constraint_lower_bound(const ArgumentTable& table) {
  RankCertificate cert;
  cert.proof = LowerBoundProof::constraint_table;
  const auto& fs = table.formulas();
  const int n = static_cast<int>(fs.size());

  std::vector<unsigned> all_props(n, 0);
  std::vector<ValueWitness> nodes;
  bool some_failure = false;
  const std::vector<int> none;
  for (int i = 0; i < n; ++i) {
    const std::vector<int> f{i};
    const bool th = table.holds(none, f), fh = table.holds(f, none), ff = table.holds(f, f);
    const std::string t = fs[i].text();
    std::string line = t + ":";
    if (th) {
      all_props[i] |= kAllDc;
      line += " (|- " + t + ") all values in every Dc;";
    }
    if (fh) {
      all_props[i] |= kNoDp;
      line += " (" + t + " |-) all values outside every Dp;";
    }
    if (ff) all_props[i] |= kRefl;
    if (!th) line += " (|/- " + t + ") some value outside some Dc;";
    if (!fh) line += " (" + t + " |/-) some value in some Dp;";
    if (!ff) line += " (" + t + " |/- " + t + ") some value in some Dp but not in its Dc;";
    some_failure = some_failure || !th || !fh || !ff;
    line.pop_back();
    cert.steps.push_back(line);
    if (!th) nodes.push_back({i, kSomeNotDc, "|/- " + t});
    if (!fh) nodes.push_back({i, kSomeDp, t + " |/-"});
    if (!ff) nodes.push_back({i, kPNotC | kSomeDp | kSomeNotDc, t + " |/- " + t});
  }
  // With a failing argument there is a world, so every formula takes some value there.
  if (!some_failure) some_failure = !table.maximal_failing().empty();
  if (some_failure)
    for (int i = 0; i < n; ++i) nodes.push_back({i, 0u, "a world exists"});
  for (auto& v : nodes) v.props |= all_props[v.formula];
  std::stable_sort(nodes.begin(), nodes.end(),
                   [](const ValueWitness& a, const ValueWitness& b) { return a.formula < b.formula; });

  // Largest family of pairwise-clashing value witnesses; the first found in node order.
  const std::size_t N = nodes.size();
  std::vector<std::size_t> best, cur;
  auto grow = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() > best.size()) best = cur;
    for (std::size_t j = from; j < N; ++j) {
      if (cur.size() + (N - j) <= best.size()) return;
      bool ok = true;
      for (auto c : cur)
        if (!clashes(nodes[c].props, nodes[j].props)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(j);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  grow(grow, 0);

  for (std::size_t i = 0; i < best.size(); ++i) {
    const auto& v = nodes[best[i]];
    std::string line = "x" + std::to_string(i + 1) + ": a value of " + fs[v.formula].text() + " (" + v.source +
                       ") " + describe(v.props);
    for (std::size_t j = 0; j < i; ++j)
      line += "; not x" + std::to_string(j + 1) + " (" + first_clash(v.props, nodes[best[j]].props) + ")";
    cert.steps.push_back(line);
  }
  cert.lower_bound = std::max<int>(1, static_cast<int>(best.size()));
  cert.steps.push_back("at least " + std::to_string(cert.lower_bound) + " values");
  return cert;
}

// ---------------------------------------------------------------- truth-adequate search

namespace {

using PairSet = std::bitset<256>;  // pair index g | d << k, k <= 4

struct TaProblem {
  const Fragment* frag = nullptr;
  int n = 0;
  std::vector<std::vector<int>> sets;
  std::vector<std::uint8_t> fails;  // per argument i * S + j, original verdict
  std::vector<ConnectiveSig> conns;
  std::vector<int> conn_of;          // per formula: connective index or -1
  std::vector<int> atom_of;          // per formula: atom index or -1
};

TaProblem make_problem(const Semantics& s, const Fragment& frag, int max_side) {
  TaProblem p;
  p.frag = &frag;
  p.n = static_cast<int>(frag.size());
  p.sets = small_subsets(p.n, max_side);
  const BoxModel orig = BoxModel::from_values(evaluate_fragment(s, frag), s.relation);
  const std::size_t S = p.sets.size();
  p.fails.resize(S * S);
  for (std::size_t i = 0; i < S; ++i)
    for (std::size_t j = 0; j < S; ++j) p.fails[i * S + j] = orig.fails(p.sets[i], p.sets[j]);
  p.conns = frag.signature.connectives();
  for (const auto& f : frag.formulas) {
    if (f.is_atom()) {
      auto it = std::find(frag.atoms.begin(), frag.atoms.end(), f.atom_name());
      p.atom_of.push_back(static_cast<int>(it - frag.atoms.begin()));
      p.conn_of.push_back(-1);
    } else {
      auto it = std::find(p.conns.begin(), p.conns.end(), f.connective());
      p.conn_of.push_back(static_cast<int>(it - p.conns.begin()));
      p.atom_of.push_back(-1);
    }
  }
  return p;
}

// Decodes a mixed-radix index into one table per connective; the first row is the most significant digit.
std::vector<std::vector<int>> decode_tables(std::uint64_t t, const std::vector<ConnectiveSig>& conns, int k) {
  std::vector<std::vector<int>> tabs(conns.size());
  for (std::size_t c = conns.size(); c-- > 0;) {
    const std::size_t rows = ipow(k, conns[c].arity);
    tabs[c].assign(rows, 0);
    for (std::size_t r = rows; r-- > 0;) {
      tabs[c][r] = static_cast<int>(t % k);
      t /= k;
    }
  }
  return tabs;
}

// vals[v * n + f] for every valuation v of the fragment atoms (first atom slowest).
std::vector<int> evaluate_all(const TaProblem& p, const std::vector<std::vector<int>>& tabs, int k) {
  const int a = static_cast<int>(p.frag->atoms.size());
  const std::size_t V = ipow(k, a);
  std::vector<int> vals(V * p.n, 0);
  for (std::size_t v = 0; v < V; ++v) {
    int* row = &vals[v * p.n];
    for (int f : p.frag->eval_order) {
      if (p.atom_of[f] >= 0) {
        row[f] = static_cast<int>((v / ipow(k, a - 1 - p.atom_of[f])) % k);
        continue;
      }
      std::size_t r = 0;
      for (int c : p.frag->children[f]) r = r * k + row[c];
      row[f] = tabs[p.conn_of[f]][r];
    }
  }
  return vals;
}

void up_close(PairSet& r, int k) {
  const std::size_t total = std::size_t{1} << (2 * k);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (r[idx]) continue;
    for (int b = 0; b < 2 * k; ++b)
      if (((idx >> b) & 1u) && r[idx ^ (std::size_t{1} << b)]) {
        r[idx] = true;
        break;
      }
  }
}

// Per-valuation value sets of every side set.
std::vector<std::uint32_t> side_values(const TaProblem& p, const std::vector<int>& vals, std::size_t V) {
  const std::size_t S = p.sets.size();
  std::vector<std::uint32_t> out(V * S, 0);
  for (std::size_t v = 0; v < V; ++v)
    for (std::size_t i = 0; i < S; ++i) {
      std::uint32_t m = 0;
      for (int f : p.sets[i]) m |= singleton(vals[v * p.n + f]);
      out[v * S + i] = m;
    }
  return out;
}

// Least monotone relation forced by the valid arguments over the chosen worlds, if it
// leaves every failing argument failing somewhere.
std::optional<PairSet> fit_relation(const TaProblem& p, const std::vector<std::uint32_t>& sv, std::size_t V,
                                    std::uint64_t mask, int k) {
  const std::size_t S = p.sets.size();
  PairSet r;
  for (std::size_t i = 0; i < S; ++i)
    for (std::size_t j = 0; j < S; ++j) {
      if (p.fails[i * S + j]) continue;
      for (std::size_t v = 0; v < V; ++v)
        if ((mask >> v) & 1u) r[sv[v * S + i] | (sv[v * S + j] << k)] = true;
    }
  up_close(r, k);
  for (std::size_t i = 0; i < S; ++i)
    for (std::size_t j = 0; j < S; ++j) {
      if (!p.fails[i * S + j]) continue;
      bool fails = false;
      for (std::size_t v = 0; v < V && !fails; ++v)
        if ((mask >> v) & 1u) fails = !r[sv[v * S + i] | (sv[v * S + j] << k)];
      if (!fails) return std::nullopt;
    }
  return r;
}

RelationTable to_table(const PairSet& r, int k) {
  RelationTable t(k, false);
  for (std::size_t idx = 0; idx < t.pair_count(); ++idx) t.set_at(idx, r[idx]);
  return t;
}

Semantics ta_witness(const TaProblem& p, const std::vector<std::vector<int>>& tabs, std::uint64_t mask,
                     const PairSet& r, int k) {
  Semantics s;
  for (int v = 0; v < k; ++v) s.values.labels.push_back("v" + std::to_string(v + 1));
  s.signature = p.frag->signature;
  for (std::size_t c = 0; c < p.conns.size(); ++c) {
    TruthFunction tf;
    tf.connective = p.conns[c];
    tf.value_count = k;
    tf.table = tabs[c];
    s.truth_functions[p.conns[c].name] = tf;
  }
  s.relation = decompose_monotone(to_table(r, k));
  s.relation.value_count = k;
  const int a = static_cast<int>(p.frag->atoms.size());
  const std::size_t V = ipow(k, a);
  if (mask == (V >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << V) - 1)) {
    s.valuational = true;
    return s;
  }
  for (std::size_t v = 0; v < V; ++v) {
    if (!((mask >> v) & 1u)) continue;
    World w;
    for (int i = 0; i < a; ++i) w.values[p.frag->atoms[i]] = static_cast<int>((v / ipow(k, a - 1 - i)) % k);
    s.worlds.push_back(std::move(w));
  }
  return s;
}

}  // namespace

TruthAdequateResult search_truth_adequate(const Semantics& s, const Fragment& frag, int k, int max_side,
                                          std::uint64_t guard) {
  if (k < 1 || k > 4) throw DomainError("truth-adequate search supports 1 to 4 values");
  const TaProblem p = make_problem(s, frag, max_side);
  const int a = static_cast<int>(frag.atoms.size());
  const std::size_t V = ipow(k, a);
  if (V > 20) throw GuardError("truth-adequate search over " + std::to_string(V) + " valuations (max 20)");
  const std::uint64_t masks = std::uint64_t{1} << V;
  std::uint64_t tf_count = 1;
  for (const auto& c : p.conns) {
    const std::uint64_t rows = ipow(k, c.arity);
    if (rows >= 64 || static_cast<double>(tf_count) * std::pow(static_cast<double>(k), rows) > 1e18)
      throw GuardError("truth-function space for '" + c.name + "' over " + std::to_string(k) + " values is too large");
    tf_count *= ipow(k, static_cast<int>(rows));
  }
  if (tf_count > guard / masks)
    throw GuardError("truth-adequate search has " + std::to_string(tf_count) + " x " + std::to_string(masks) +
                     " candidates, over the guard of " + std::to_string(guard));

  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  const std::int64_t T = static_cast<std::int64_t>(tf_count);
#pragma omp parallel for schedule(dynamic, 4) reduction(min : best)
  for (std::int64_t t = 0; t < T; ++t) {
    if (static_cast<std::uint64_t>(t) * masks > best) continue;
    const auto tabs = decode_tables(static_cast<std::uint64_t>(t), p.conns, k);
    const auto vals = evaluate_all(p, tabs, k);
    const auto sv = side_values(p, vals, V);
    for (std::uint64_t m = 0; m < masks; ++m)
      if (fit_relation(p, sv, V, m, k)) {
        best = std::min<std::uint64_t>(best, static_cast<std::uint64_t>(t) * masks + m);
        break;
      }
  }

  TruthAdequateResult res;
  res.values = k;
  res.candidates = tf_count * masks;
  if (best == std::numeric_limits<std::uint64_t>::max()) return res;
  const std::uint64_t t = best / masks, m = best % masks;
  const auto tabs = decode_tables(t, p.conns, k);
  const auto sv = side_values(p, evaluate_all(p, tabs, k), V);
  const auto r = fit_relation(p, sv, V, m, k);
  Semantics w = ta_witness(p, tabs, m, *r, k);
  const BoxModel a_model = BoxModel::from_values(evaluate_fragment(s, frag), s.relation);
  const BoxModel b_model = BoxModel::from_values(evaluate_fragment(w, frag), w.relation);
  if (!compare_verdicts(a_model, b_model, max_side).agree())
    throw std::logic_error("truth-adequate witness disagrees with the source semantics");
  res.candidates = best + 1;
  res.witness = std::move(w);
  return res;
}

PropertyReport no_bivalent_tf_semantics(const Semantics& s, const Fragment& frag, int max_side) {
  constexpr int k = 2;
  const TaProblem p = make_problem(s, frag, max_side);
  const std::size_t S = p.sets.size();
  const int a = static_cast<int>(frag.atoms.size());
  const std::size_t V = ipow(k, a);
  if (V > 16) throw GuardError("too many atoms for the bivalent search");
  PropertyReport rep;
  rep.property = "no bivalent truth-adequate semantics";
  rep.fragment_relative = true;
  auto& out = rep.witness;
  const std::vector<std::string> lab{"x1", "x2"};
  auto vset = [&](std::uint32_t m) {
    std::string t = "{";
    for (int v = 0; v < k; ++v)
      if ((m >> v) & 1u) t += (t.size() > 1 ? ", " : "") + lab[v];
    return t + "}";
  };

  // Every relation over P({x1,x2})^2, kept when monotone.
  std::vector<PairSet> relations;
  for (std::uint32_t bits = 0; bits < (1u << 16); ++bits) {
    PairSet r;
    for (int i = 0; i < 16; ++i) r[i] = (bits >> i) & 1u;
    PairSet c = r;
    up_close(c, k);
    if (c == r) relations.push_back(r);
  }
  out.push_back(std::to_string(relations.size()) + " of 65536 relations over {x1, x2} are monotone");

  auto arg_within = [&](std::size_t i, std::size_t j, auto pred) {
    for (int f : p.sets[i])
      if (!pred(f)) return false;
    for (int f : p.sets[j])
      if (!pred(f)) return false;
    return true;
  };
  auto holds_under = [&](const PairSet& r, const std::vector<int>& vals, std::uint64_t mask, std::size_t i,
                         std::size_t j) {
    for (std::size_t v = 0; v < V; ++v) {
      if (!((mask >> v) & 1u)) continue;
      std::uint32_t g = 0, d = 0;
      for (int f : p.sets[i]) g |= singleton(vals[v * p.n + f]);
      for (int f : p.sets[j]) d |= singleton(vals[v * p.n + f]);
      if (!r[g | (d << k)]) return false;
    }
    return true;
  };
  auto relation_text = [&](const PairSet& r) {
    const auto ir = decompose_monotone(to_table(r, k));
    if (ir.members.empty()) return std::string("universal");
    std::string t;
    for (const auto& m : ir.members) t += (t.empty() ? "" : " & ") + ("(" + vset(m.dp) + ", " + vset(m.dc) + ")");
    return t;
  };

  std::vector<int> constants, others;
  for (std::size_t c = 0; c < p.conns.size(); ++c) (p.conns[c].arity == 0 ? constants : others).push_back(static_cast<int>(c));

  struct Cand {
    PairSet r;
    std::vector<std::vector<int>> tabs;
    std::uint64_t mask = 0;
  };

  // Stage 1: constants only; any world will do, since constants take one value everywhere.
  auto is_const_formula = [&](int f) { return p.conn_of[f] >= 0 && p.conns[p.conn_of[f]].arity == 0; };
  std::vector<std::pair<std::size_t, std::size_t>> stage1;
  for (std::size_t i = 0; i < S; ++i)
    for (std::size_t j = 0; j < S; ++j)
      if (arg_within(i, j, is_const_formula)) stage1.emplace_back(i, j);
  std::vector<Cand> cands;
  const std::uint64_t const_combos = ipow(k, static_cast<int>(constants.size()));
  for (const auto& r : relations)
    for (std::uint64_t cc = 0; cc < const_combos; ++cc) {
      Cand c{r, std::vector<std::vector<int>>(p.conns.size()), 1};
      std::uint64_t rest = cc;
      for (std::size_t q = constants.size(); q-- > 0;) {
        c.tabs[constants[q]] = {static_cast<int>(rest % k)};
        rest /= k;
      }
      std::vector<int> vals(V * p.n, 0);
      for (std::size_t v = 0; v < V; ++v)
        for (int f = 0; f < p.n; ++f)
          if (is_const_formula(f)) vals[v * p.n + f] = c.tabs[p.conn_of[f]][0];
      bool ok = true;
      for (auto [i, j] : stage1)
        if (holds_under(r, vals, 1, i, j) == static_cast<bool>(p.fails[i * S + j])) {
          ok = false;
          break;
        }
      if (ok) cands.push_back(std::move(c));
    }
  out.push_back("stage 1, " + std::to_string(stage1.size()) + " arguments over constants: " +
                std::to_string(cands.size()) + " of " + std::to_string(relations.size() * const_combos) +
                " (relation, constants) candidates survive");
  for (const auto& c : cands) {
    std::string line = "  relation " + relation_text(c.r);
    for (int q : constants) line += ", #" + p.conns[q].name + " = " + lab[c.tabs[q][0]];
    out.push_back(line);
  }

  // Stage 2: remaining truth functions and world sets, against arguments of depth <= 1
  // with at most one formula per side.
  auto shallow = [&](int f) { return frag.formulas[f].depth() <= 1; };
  std::vector<std::pair<std::size_t, std::size_t>> stage2;
  for (std::size_t i = 0; i < S; ++i)
    for (std::size_t j = 0; j < S; ++j)
      if (p.sets[i].size() <= 1 && p.sets[j].size() <= 1 && arg_within(i, j, shallow)) stage2.emplace_back(i, j);
  std::uint64_t other_combos = 1;
  for (int q : others) other_combos *= ipow(k, static_cast<int>(ipow(k, p.conns[q].arity)));
  const std::uint64_t masks = std::uint64_t{1} << V;
  std::vector<Cand> next;
  std::vector<std::vector<int>> vals_of;
  for (const auto& c : cands)
    for (std::uint64_t oc = 0; oc < other_combos; ++oc) {
      Cand d = c;
      std::uint64_t rest = oc;
      for (std::size_t q = others.size(); q-- > 0;) {
        const std::size_t rows = ipow(k, p.conns[others[q]].arity);
        d.tabs[others[q]].assign(rows, 0);
        for (std::size_t row = rows; row-- > 0;) {
          d.tabs[others[q]][row] = static_cast<int>(rest % k);
          rest /= k;
        }
      }
      const auto vals = evaluate_all(p, d.tabs, k);
      for (std::uint64_t m = 1; m < masks; ++m) {
        bool ok = true;
        for (auto [i, j] : stage2)
          if (holds_under(d.r, vals, m, i, j) == static_cast<bool>(p.fails[i * S + j])) {
            ok = false;
            break;
          }
        if (!ok) continue;
        d.mask = m;
        next.push_back(d);
        vals_of.push_back(vals);
      }
    }
  out.push_back("stage 2, " + std::to_string(stage2.size()) + " single-formula arguments of depth <= 1: " +
                std::to_string(next.size()) + " of " + std::to_string(cands.size() * other_combos * (masks - 1)) +
                " (truth functions, world set) extensions survive");
  for (const auto& c : next) {
    std::string line = " ";
    for (int q : others) {
      line += " " + p.conns[q].name + " = [";
      for (std::size_t row = 0; row < c.tabs[q].size(); ++row) line += (row ? " " : "") + lab[c.tabs[q][row]];
      line += "],";
    }
    line += " worlds:";
    for (std::size_t v = 0; v < V; ++v) {
      if (!((c.mask >> v) & 1u)) continue;
      std::string wv;
      for (int i = 0; i < a; ++i)
        wv += (i ? " " : "") + frag.atoms[i] + "=" + lab[(v / ipow(k, a - 1 - i)) % k];
      line += " {" + wv + "}";
    }
    out.push_back(line);
  }

  // Stage 3: every argument; report the first clash of each survivor.
  std::size_t survivors = 0;
  for (std::size_t c = 0; c < next.size(); ++c) {
    bool clash = false;
    for (std::size_t i = 0; i < S && !clash; ++i)
      for (std::size_t j = 0; j < S && !clash; ++j) {
        const bool h = holds_under(next[c].r, vals_of[c], next[c].mask, i, j);
        if (h != static_cast<bool>(p.fails[i * S + j])) continue;
        clash = true;
        const std::string txt = format_argument(Argument{p.sets[i], p.sets[j]}, frag.formulas, !p.fails[i * S + j]);
        out.push_back("  survivor " + std::to_string(c + 1) + " clashes on " + txt + " (candidate says " +
                      (h ? "holds" : "fails") + ")");
      }
    if (!clash) ++survivors;
  }
  out.push_back("stage 3, all " + std::to_string(S * S) + " arguments: " + std::to_string(survivors) + " survive");
  rep.holds = survivors == 0;
  return rep;
}

RankCertificate truth_functional_rank(const Semantics& s, const Fragment& frag, int max_values, int max_side) {
  RankCertificate cert;
  cert.proof = LowerBoundProof::exhausted_search;
  for (int k = 1; k <= max_values; ++k) {
    auto res = search_truth_adequate(s, frag, k, max_side);
    if (!res.witness) {
      cert.refutations.push_back(res.candidates);
      cert.steps.push_back("k = " + std::to_string(k) + ": all " + std::to_string(res.candidates) +
                           " (truth functions, world set) candidates refuted");
      cert.lower_bound = k + 1;
      continue;
    }
    cert.refutations.push_back(res.candidates - 1);
    cert.steps.push_back("k = " + std::to_string(k) + ": witness after " + std::to_string(res.candidates) +
                         " candidates");
    cert.rank = k;
    cert.lower_bound = k;
    cert.witness = std::move(res.witness);
    return cert;
  }
  return cert;
}

}  // namespace mvl
