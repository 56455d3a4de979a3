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

#include "mvl/argument.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "mvl/error.hpp"

namespace mvl {

std::string format_argument(const Argument& a, const std::vector<Formula>& formulas, bool holds) {
  auto side = [&](const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ", ";
      s += formulas.at(xs[i]).text();
    }
    return s;
  };
  std::string p = side(a.premises), c = side(a.conclusions);
  std::string turnstile = holds ? "|-" : "|/-";
  std::string out = p;
  if (!p.empty()) out += " ";
  out += turnstile;
  if (!c.empty()) out += " " + c;
  return out;
}

bool box_contains(const Box& outer, const Box& inner) {
  return inner.p.subset_of(outer.p) && inner.n.subset_of(outer.n);
}

std::vector<Box> maximal_boxes(std::vector<Box> boxes) {
  std::sort(boxes.begin(), boxes.end());
  boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
  std::vector<Box> out;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < boxes.size() && !dominated; ++j)
      if (i != j && box_contains(boxes[j], boxes[i])) dominated = true;
    if (!dominated) out.push_back(boxes[i]);
  }
  return out;
}

namespace {

BitSet bits_of(const std::vector<int>& xs, std::size_t n) {
  BitSet b(n);
  for (int x : xs) {
    if (x < 0 || static_cast<std::size_t>(x) >= n) throw DomainError("argument index out of range");
    b.set(static_cast<std::size_t>(x));
  }
  return b;
}

std::uint64_t mask_of(const BitSet& b) {
  std::uint64_t m = 0;
  for (auto i : b.indices()) m |= std::uint64_t{1} << i;
  return m;
}

BitSet bits_from_mask(std::uint64_t m, std::size_t n) {
  BitSet b(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((m >> i) & 1u) b.set(i);
  return b;
}

}  // namespace

ArgumentTable ArgumentTable::from_boxes(std::vector<Formula> formulas, std::vector<Box> boxes) {
  ArgumentTable t;
  t.formulas_ = std::move(formulas);
  for (const auto& b : boxes)
    if (b.p.size() != t.formulas_.size() || b.n.size() != t.formulas_.size())
      throw DomainError("box size does not match the formula list");
  t.boxes_ = maximal_boxes(std::move(boxes));
  return t;
}

ArgumentTable ArgumentTable::from_verdicts(std::vector<Formula> formulas, std::vector<std::uint8_t> holds) {
  const std::size_t n = formulas.size();
  if (n > kMaxExplicitFormulas)
    throw GuardError("explicit verdict tables are limited to " + std::to_string(kMaxExplicitFormulas) + " formulas");
  if (holds.size() != (std::size_t{1} << (2 * n))) throw DomainError("verdict map has the wrong size");
  ArgumentTable t;
  t.formulas_ = std::move(formulas);
  t.explicit_ = std::move(holds);
  for (auto& v : t.explicit_) v = v ? 1 : 0;

  // Maximal failing pairs: failing, with no failing proper superset.
  const std::size_t pairs = t.explicit_.size();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint8_t> above(pairs, 0);  // some failing pair at or above
  for (std::size_t idx = pairs; idx-- > 0;) {
    std::uint64_t g = idx & full, d = idx >> n;
    bool any = !t.explicit_[idx];
    for (std::size_t x = 0; x < n && !any; ++x) {
      if (!((g >> x) & 1u) && above[(g | (std::uint64_t{1} << x)) | (d << n)]) any = true;
      if (!((d >> x) & 1u) && above[g | ((d | (std::uint64_t{1} << x)) << n)]) any = true;
    }
    above[idx] = any;
  }
  for (std::size_t idx = 0; idx < pairs; ++idx) {
    if (t.explicit_[idx]) continue;
    std::uint64_t g = idx & full, d = idx >> n;
    bool maximal = true;
    for (std::size_t x = 0; x < n && maximal; ++x) {
      if (!((g >> x) & 1u) && above[(g | (std::uint64_t{1} << x)) | (d << n)]) maximal = false;
      if (!((d >> x) & 1u) && above[g | ((d | (std::uint64_t{1} << x)) << n)]) maximal = false;
    }
    if (maximal) t.boxes_.push_back(Box{bits_from_mask(g, n), bits_from_mask(d, n)});
  }
  std::sort(t.boxes_.begin(), t.boxes_.end());
  return t;
}

std::optional<int> ArgumentTable::index_of(const Formula& f) const {
  for (std::size_t i = 0; i < formulas_.size(); ++i)
    if (formulas_[i] == f) return static_cast<int>(i);
  return std::nullopt;
}

bool ArgumentTable::holds(const BitSet& gamma, const BitSet& delta) const {
  if (!explicit_.empty()) return holds(mask_of(gamma), mask_of(delta));
  for (const auto& b : boxes_)
    if (gamma.subset_of(b.p) && delta.subset_of(b.n)) return false;
  return true;
}

bool ArgumentTable::holds(const std::vector<int>& gamma, const std::vector<int>& delta) const {
  return holds(bits_of(gamma, size()), bits_of(delta, size()));
}

bool ArgumentTable::holds(std::uint64_t gamma, std::uint64_t delta) const {
  const std::size_t n = size();
  if (n > 32) throw DomainError("mask queries need at most 32 formulas");
  if (!explicit_.empty()) return explicit_[gamma | (delta << n)] != 0;
  return holds(bits_from_mask(gamma, n), bits_from_mask(delta, n));
}

bool ArgumentTable::is_monotone() const {
  if (explicit_.empty()) return true;
  const std::size_t n = size();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::size_t idx = 0; idx < explicit_.size(); ++idx) {
    if (!explicit_[idx]) continue;
    std::uint64_t g = idx & full, d = idx >> n;
    for (std::size_t x = 0; x < n; ++x) {
      if (!((g >> x) & 1u) && !explicit_[(g | (std::uint64_t{1} << x)) | (d << n)]) return false;
      if (!((d >> x) & 1u) && !explicit_[g | ((d | (std::uint64_t{1} << x)) << n)]) return false;
    }
  }
  return true;
}

std::vector<std::uint8_t> ArgumentTable::materialize() const {
  const std::size_t n = size();
  if (n > kMaxExplicitFormulas)
    throw GuardError("cannot materialize a table over more than " + std::to_string(kMaxExplicitFormulas) +
                     " formulas");
  if (!explicit_.empty()) return explicit_;
  std::vector<std::uint8_t> out(std::size_t{1} << (2 * n), 1);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> masks;
  for (const auto& b : boxes_) masks.emplace_back(mask_of(b.p), mask_of(b.n));
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    std::uint64_t g = idx & full, d = idx >> n;
    for (const auto& [p, q] : masks)
      if ((g & ~p) == 0 && (d & ~q) == 0) {
        out[idx] = 0;
        break;
      }
  }
  return out;
}

ArgumentTable ArgumentTable::restrict_to(const std::vector<int>& keep) const {
  std::vector<Formula> fs;
  for (int k : keep) fs.push_back(formulas_.at(k));
  if (explicit_.empty()) {
    std::vector<Box> boxes;
    for (const auto& b : boxes_) {
      Box nb{BitSet(keep.size()), BitSet(keep.size())};
      for (std::size_t i = 0; i < keep.size(); ++i) {
        if (b.p.test(keep[i])) nb.p.set(i);
        if (b.n.test(keep[i])) nb.n.set(i);
      }
      boxes.push_back(std::move(nb));
    }
    return from_boxes(std::move(fs), std::move(boxes));
  }
  const std::size_t m = keep.size(), n = size();
  std::vector<std::uint8_t> v(std::size_t{1} << (2 * m));
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    std::uint64_t g = idx & full, d = idx >> m, G = 0, D = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if ((g >> i) & 1u) G |= std::uint64_t{1} << keep[i];
      if ((d >> i) & 1u) D |= std::uint64_t{1} << keep[i];
    }
    v[idx] = explicit_[G | (D << n)];
  }
  return from_verdicts(std::move(fs), std::move(v));
}

ArgumentTable table_from_semantics(const Semantics& s, const std::vector<Formula>& formulas) {
  ValueMatrix m = evaluate_formulas(s, formulas);
  const std::size_t n = formulas.size();
  std::vector<Box> boxes;
  for (std::size_t w = 0; w < m.world_count; ++w)
    for (const auto& mem : s.relation.members) {
      Box b{BitSet(n), BitSet(n)};
      for (std::size_t i = 0; i < n; ++i) {
        int v = m(w, i);
        if (contains(mem.dp, v)) b.p.set(i);
        if (!contains(mem.dc, v)) b.n.set(i);
      }
      boxes.push_back(std::move(b));
    }
  return ArgumentTable::from_boxes(formulas, std::move(boxes));
}

std::vector<TracedArgument> trace_arguments(const ValueMatrix& values, const std::vector<Argument>& arguments) {
  std::vector<TracedArgument> out;
  out.reserve(arguments.size());
  for (const auto& a : arguments) {
    TracedArgument t{a, {}};
    for (std::size_t w = 0; w < values.world_count; ++w) {
      ValueSet g = 0, d = 0;
      for (int i : a.premises) g |= singleton(values(w, i));
      for (int i : a.conclusions) d |= singleton(values(w, i));
      t.trace.emplace_back(g, d);
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::vector<int>> small_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  for (int size = 0; size <= k && size <= n; ++size) {
    cur.assign(size, 0);
    for (int i = 0; i < size; ++i) cur[i] = i;
    while (true) {
      out.push_back(cur);
      int i = size - 1;
      while (i >= 0 && cur[i] == n - size + i) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------- truth-relationality

namespace {

using Pair = std::pair<ValueSet, ValueSet>;

struct ArgKey {
  std::size_t formulas;
  std::size_t nodes;
  std::vector<std::string> premises, conclusions;
  friend bool operator<(const ArgKey& a, const ArgKey& b) {
    return std::tie(a.formulas, a.nodes, a.premises, a.conclusions) <
           std::tie(b.formulas, b.nodes, b.premises, b.conclusions);
  }
};

ArgKey key_of(const Argument& a, const std::vector<Formula>& fs) {
  ArgKey k{a.premises.size() + a.conclusions.size(), 0, {}, {}};
  for (int i : a.premises) {
    k.nodes += fs[i].size();
    k.premises.push_back(fs[i].text());
  }
  for (int i : a.conclusions) {
    k.nodes += fs[i].size();
    k.conclusions.push_back(fs[i].text());
  }
  std::sort(k.premises.begin(), k.premises.end());
  std::sort(k.conclusions.begin(), k.conclusions.end());
  return k;
}

}  // namespace

TruthRelationResult find_truth_relation(const ArgumentTable& table, const std::vector<TracedArgument>& traces,
                                        int value_count) {
  if (value_count < 1 || value_count > 12) throw DomainError("truth-relation search needs 1..12 values");
  const ValueSet all = full_set(value_count);
  std::optional<std::size_t> worlds;
  for (const auto& t : traces) {
    if (worlds && *worlds != t.trace.size()) throw DomainError("trace/table mismatch: traces disagree on world count");
    worlds = t.trace.size();
    for (const auto& [g, d] : t.trace)
      if (!subset_of(g, all) || !subset_of(d, all)) throw DomainError("trace/table mismatch: value outside V");
    for (int i : t.argument.premises)
      if (i < 0 || static_cast<std::size_t>(i) >= table.size()) throw DomainError("trace/table mismatch: bad index");
    for (int i : t.argument.conclusions)
      if (i < 0 || static_cast<std::size_t>(i) >= table.size()) throw DomainError("trace/table mismatch: bad index");
  }

  const auto& fs = table.formulas();
  std::vector<std::size_t> order(traces.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<ArgKey> keys;
  keys.reserve(traces.size());
  for (const auto& t : traces) keys.push_back(key_of(t.argument, fs));
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  std::vector<bool> valid(traces.size());
  RelationTable forced(value_count, false);
  for (std::size_t i = 0; i < traces.size(); ++i) {
    valid[i] = table.holds(traces[i].argument.premises, traces[i].argument.conclusions);
    if (valid[i])
      for (const auto& [g, d] : traces[i].trace) forced.set(g, d, true);
  }

  TruthRelationResult result;
  for (std::size_t oi : order) {
    if (valid[oi]) continue;
    const auto& t = traces[oi];
    bool all_forced = std::all_of(t.trace.begin(), t.trace.end(),
                                  [&](const Pair& p) { return forced.holds(p.first, p.second); });
    if (!all_forced) continue;

    TruthRelationClash clash{t, {}};
    std::set<Pair> need(t.trace.begin(), t.trace.end());
    // Rank forcing candidates: fewest pairs outside `need`, then size, then canonical order.
    struct Cand {
      std::size_t extra;
      std::size_t pos;
      std::size_t idx;
    };
    std::vector<Cand> cands;
    std::vector<std::size_t> rank_of(traces.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank_of[order[r]] = r;
    for (std::size_t i = 0; i < traces.size(); ++i) {
      if (!valid[i]) continue;
      std::set<Pair> mine(traces[i].trace.begin(), traces[i].trace.end());
      bool touches = false;
      std::size_t extra = 0;
      for (const auto& p : mine) {
        if (need.count(p))
          touches = true;
        else
          ++extra;
      }
      if (touches) cands.push_back({extra, rank_of[i], i});
    }
    std::sort(cands.begin(), cands.end(),
              [](const Cand& a, const Cand& b) { return std::tie(a.extra, a.pos) < std::tie(b.extra, b.pos); });

    std::set<Pair> covered;
    for (const auto& c : cands) {
      if (covered.size() == need.size()) break;
      bool helps = false;
      for (const auto& p : traces[c.idx].trace)
        if (need.count(p) && !covered.count(p)) helps = true;
      if (!helps) continue;
      clash.forcing.push_back(traces[c.idx]);
      for (const auto& p : traces[c.idx].trace)
        if (need.count(p)) covered.insert(p);
    }
    result.clash = std::move(clash);
    return result;
  }
  result.relation = std::move(forced);
  return result;
}

}  // namespace mvl
