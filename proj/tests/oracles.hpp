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

// Brute-force reference definitions used as test oracles. Everything here works on
// explicit element lists and nested loops, never on the library's bit tricks.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "mvl/semantics.hpp"

namespace oracle {

using Set = std::set<int>;

inline Set to_set(std::uint32_t mask, int n) {
  Set s;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) s.insert(i);
  return s;
}

inline bool subset(const Set& a, const Set& b) {
  for (int x : a)
    if (!b.count(x)) return false;
  return true;
}

inline bool meets(const Set& a, const Set& b) {
  for (int x : a)
    if (b.count(x)) return true;
  return false;
}

inline Set unite(const Set& a, const Set& b) {
  Set s = a;
  s.insert(b.begin(), b.end());
  return s;
}

// gamma inside dp forces delta to meet dc.
inline bool mixed(const Set& dp, const Set& dc, const Set& gamma, const Set& delta) {
  return !subset(gamma, dp) || meets(delta, dc);
}

// A relation over P(V)^2 as a flat vector, entry [g + d * 2^n] for masks g, d.
struct Rel {
  int n = 0;
  std::vector<char> v;
  bool at(std::uint32_t g, std::uint32_t d) const { return v[g + (std::size_t{d} << n)]; }
};

inline Rel from_members(const std::vector<std::pair<Set, Set>>& members, int n) {
  Rel r{n, std::vector<char>(std::size_t{1} << (2 * n), 1)};
  for (std::uint32_t g = 0; g < (1u << n); ++g)
    for (std::uint32_t d = 0; d < (1u << n); ++d) {
      bool all = true;
      for (const auto& [dp, dc] : members) all = all && mixed(dp, dc, to_set(g, n), to_set(d, n));
      r.v[g + (std::size_t{d} << n)] = all;
    }
  return r;
}

inline Rel from_table(const mvl::RelationTable& t) {
  Rel r{t.value_count(), std::vector<char>(t.pair_count())};
  for (std::size_t i = 0; i < t.pair_count(); ++i) r.v[i] = t.at(i);
  return r;
}

inline mvl::RelationTable to_table(const Rel& r) {
  mvl::RelationTable t(r.n, false);
  for (std::size_t i = 0; i < r.v.size(); ++i) t.set_at(i, r.v[i]);
  return t;
}

inline bool monotone(const Rel& r) {
  const std::uint32_t N = 1u << r.n;
  for (std::uint32_t g1 = 0; g1 < N; ++g1)
    for (std::uint32_t d1 = 0; d1 < N; ++d1) {
      if (!r.at(g1, d1)) continue;
      for (std::uint32_t g2 = 0; g2 < N; ++g2)
        for (std::uint32_t d2 = 0; d2 < N; ++d2)
          if (subset(to_set(g1, r.n), to_set(g2, r.n)) && subset(to_set(d1, r.n), to_set(d2, r.n)) && !r.at(g2, d2))
            return false;
    }
  return true;
}

inline bool reflexive(const Rel& r) {
  for (int x = 0; x < r.n; ++x)
    if (!r.at(1u << x, 1u << x)) return false;
  return true;
}

inline bool value_transitive(const Rel& r) {
  const std::uint32_t N = 1u << r.n;
  for (std::uint32_t g = 0; g < N; ++g)
    for (std::uint32_t d = 0; d < N; ++d) {
      if (r.at(g, d)) continue;
      bool extends = false;
      for (std::uint32_t g2 = 0; g2 < N && !extends; ++g2)
        for (std::uint32_t d2 = 0; d2 < N && !extends; ++d2)
          extends = subset(to_set(g, r.n), to_set(g2, r.n)) && subset(to_set(d, r.n), to_set(d2, r.n)) &&
                    unite(to_set(g2, r.n), to_set(d2, r.n)).size() == static_cast<std::size_t>(r.n) && !r.at(g2, d2);
      if (!extends) return false;
    }
  return true;
}

inline bool permeable_l2r(const Rel& r) {
  const std::uint32_t N = 1u << r.n;
  for (std::uint32_t g = 0; g < N; ++g)
    for (std::uint32_t d = 0; d < N; ++d)
      for (std::uint32_t s = 0; s < N; ++s)
        if (r.at(g | s, d) && !r.at(g, s | d)) return false;
  return true;
}

inline bool permeable_r2l(const Rel& r) {
  const std::uint32_t N = 1u << r.n;
  for (std::uint32_t g = 0; g < N; ++g)
    for (std::uint32_t d = 0; d < N; ++d)
      for (std::uint32_t s = 0; s < N; ++s)
        if (r.at(g, s | d) && !r.at(g | s, d)) return false;
  return true;
}

// Failing pairs declared at random, then closed downward: the complement is monotone.
inline Rel random_monotone(int n, std::mt19937_64& rng, int seeds) {
  const std::uint32_t N = 1u << n;
  Rel r{n, std::vector<char>(std::size_t{1} << (2 * n), 1)};
  std::uniform_int_distribution<std::uint32_t> pick(0, N - 1);
  for (int i = 0; i < seeds; ++i) {
    const std::uint32_t g = pick(rng), d = pick(rng);
    for (std::uint32_t g2 = 0; g2 < N; ++g2)
      for (std::uint32_t d2 = 0; d2 < N; ++d2)
        if ((g2 & ~g) == 0 && (d2 & ~d) == 0) r.v[g2 + (std::size_t{d2} << n)] = 0;
  }
  return r;
}

// Every monotone Boolean function of k variables as a truth-table mask (k <= 6),
// built as pairs f0 <= f1 of functions of k - 1 variables. At k = 2n these are
// exactly the monotone relations over n values, index g | d << n.
inline std::vector<std::uint64_t> monotone_functions(int k) {
  if (k == 0) return {0, 1};
  const std::vector<std::uint64_t> prev = monotone_functions(k - 1);
  const int half = 1 << (k - 1);
  std::vector<std::uint64_t> out;
  for (std::uint64_t lo : prev)
    for (std::uint64_t hi : prev)
      if ((lo & ~hi) == 0) out.push_back(lo | (hi << half));
  return out;
}

// x ~ y iff adding either to either side gives the same verdicts everywhere.
inline std::vector<std::vector<int>> canonical_classes(const Rel& r) {
  const std::uint32_t N = 1u << r.n;
  auto same = [&](int x, int y) {
    for (std::uint32_t g = 0; g < N; ++g)
      for (std::uint32_t d = 0; d < N; ++d) {
        if (r.at(g | (1u << x), d) != r.at(g | (1u << y), d)) return false;
        if (r.at(g, d | (1u << x)) != r.at(g, d | (1u << y))) return false;
      }
    return true;
  };
  std::vector<std::vector<int>> classes;
  std::vector<int> cls(r.n, -1);
  for (int x = 0; x < r.n; ++x) {
    if (cls[x] >= 0) continue;
    cls[x] = static_cast<int>(classes.size());
    classes.push_back({x});
    for (int y = x + 1; y < r.n; ++y)
      if (cls[y] < 0 && same(x, y)) {
        cls[y] = cls[x];
        classes.back().push_back(y);
      }
  }
  return classes;
}

inline std::uint32_t image(std::uint32_t s, const std::vector<int>& map) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < map.size(); ++i)
    if (s & (1u << i)) out |= 1u << map[i];
  return out;
}

// Equal images force equal verdicts.
inline bool relation_g_reduction(const Rel& r, const std::vector<int>& map) {
  const std::uint32_t N = 1u << r.n;
  for (std::uint32_t g = 0; g < N; ++g)
    for (std::uint32_t d = 0; d < N; ++d)
      for (std::uint32_t g2 = 0; g2 < N; ++g2)
        for (std::uint32_t d2 = 0; d2 < N; ++d2)
          if (image(g, map) == image(g2, map) && image(d, map) == image(d2, map) && r.at(g, d) != r.at(g2, d2))
            return false;
  return true;
}

// Every surjection of {0..n-1} onto {0..k-1} in restricted-growth form.
inline std::vector<std::vector<int>> surjections(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 0);
  auto rec = [&](auto&& self, int i, int maxv) -> void {
    if (i == n) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      a[i] = v;
      self(self, i + 1, std::max(maxv, v));
    }
  };
  if (n > 0) {
    a[0] = 0;
    rec(rec, 1, 0);
  }
  return out;
}

// Least k <= max_k such that one mixed relation (dp, dc) over k values with some set of
// worlds (value vectors over the formulas) yields exactly the given verdicts. With all
// sound worlds taken together, completeness holds iff each failing argument has one.
// verdicts[g + d * 2^n] for formula masks g, d.
inline std::optional<int> mixed_rank(const std::vector<char>& verdicts, int n, int max_k) {
  const std::uint32_t F = 1u << n;
  for (int k = 1; k <= max_k; ++k) {
    std::uint64_t worlds = 1;
    for (int i = 0; i < n; ++i) worlds *= k;
    for (std::uint32_t dp = 0; dp < (1u << k); ++dp)
      for (std::uint32_t dc = 0; dc < (1u << k); ++dc) {
        const Set DP = to_set(dp, k), DC = to_set(dc, k);
        std::vector<char> covered(verdicts.size(), 0);
        for (std::uint64_t w = 0; w < worlds; ++w) {
          std::vector<int> val(n);
          std::uint64_t x = w;
          for (int i = 0; i < n; ++i) {
            val[i] = static_cast<int>(x % k);
            x /= k;
          }
          bool sound = true;
          std::vector<std::uint32_t> fails;
          for (std::uint32_t g = 0; g < F && sound; ++g)
            for (std::uint32_t d = 0; d < F && sound; ++d) {
              Set gs, ds;
              for (int i = 0; i < n; ++i) {
                if (g & (1u << i)) gs.insert(val[i]);
                if (d & (1u << i)) ds.insert(val[i]);
              }
              if (!mixed(DP, DC, gs, ds)) {
                if (verdicts[g + (std::size_t{d} << n)]) sound = false;
                fails.push_back(g + (d << n));
              }
            }
          if (sound)
            for (auto idx : fails) covered[idx] = 1;
        }
        bool complete = true;
        for (std::size_t i = 0; i < verdicts.size() && complete; ++i)
          if (!verdicts[i] && !covered[i]) complete = false;
        if (complete) return k;
      }
  }
  return std::nullopt;
}

}  // namespace oracle
