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

#include "mvl/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <map>

#include "mvl/error.hpp"

namespace mvl {

void set_thread_limit(int n) {
  if (n > 0) omp_set_num_threads(n);
}

int thread_limit() { return omp_get_max_threads(); }

namespace {

void set_bit(std::vector<std::uint64_t>& v, std::size_t words, std::size_t f, std::size_t b) {
  v[f * words + (b >> 6)] |= std::uint64_t{1} << (b & 63);
}

std::vector<std::uint64_t> all_boxes(std::size_t box_count, std::size_t words) {
  std::vector<std::uint64_t> m(words, 0);
  for (std::size_t b = 0; b < box_count; ++b) m[b >> 6] |= std::uint64_t{1} << (b & 63);
  return m;
}

}  // namespace

bool BoxModel::fails(const std::vector<int>& premises, const std::vector<int>& conclusions) const {
  auto acc = all_boxes(box_count, words);
  for (int f : premises)
    for (std::size_t w = 0; w < words; ++w) acc[w] &= p_mask(f)[w];
  for (int f : conclusions)
    for (std::size_t w = 0; w < words; ++w) acc[w] &= n_mask(f)[w];
  return std::any_of(acc.begin(), acc.end(), [](std::uint64_t x) { return x != 0; });
}

BoxModel BoxModel::from_values(const ValueMatrix& values, const IntersectiveRelation& r) {
  BoxModel m;
  m.formula_count = values.formula_count;
  m.box_count = values.world_count * r.members.size();
  m.words = std::max<std::size_t>(1, (m.box_count + 63) / 64);
  m.in_p.assign(m.formula_count * m.words, 0);
  m.in_n.assign(m.formula_count * m.words, 0);
  const std::size_t members = r.members.size();
  for (std::size_t w = 0; w < values.world_count; ++w)
    for (std::size_t l = 0; l < members; ++l) {
      const auto& mem = r.members[l];
      const std::size_t b = w * members + l;
      for (std::size_t f = 0; f < m.formula_count; ++f) {
        int v = values(w, f);
        if (contains(mem.dp, v)) set_bit(m.in_p, m.words, f, b);
        if (!contains(mem.dc, v)) set_bit(m.in_n, m.words, f, b);
      }
    }
  return m;
}

BoxModel BoxModel::from_boxes(std::size_t formula_count, const std::vector<Box>& boxes) {
  BoxModel m;
  m.formula_count = formula_count;
  m.box_count = boxes.size();
  m.words = std::max<std::size_t>(1, (m.box_count + 63) / 64);
  m.in_p.assign(formula_count * m.words, 0);
  m.in_n.assign(formula_count * m.words, 0);
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    if (boxes[b].p.size() != formula_count || boxes[b].n.size() != formula_count)
      throw DomainError("box size does not match the formula count");
    for (auto f : boxes[b].p.indices()) set_bit(m.in_p, m.words, f, b);
    for (auto f : boxes[b].n.indices()) set_bit(m.in_n, m.words, f, b);
  }
  return m;
}

std::uint64_t binomial_prefix(std::uint64_t n, int k) {
  std::uint64_t total = 0, c = 1;
  for (int j = 0; j <= k && static_cast<std::uint64_t>(j) <= n; ++j) {
    total += c;
    c = c * (n - j) / (j + 1);
  }
  return total;
}

namespace {

// Per-set masks for one model, laid out set-major.
struct SideMasks {
  std::size_t words = 0;
  std::vector<std::uint64_t> p, n;
};

SideMasks side_masks(const BoxModel& m, const std::vector<std::vector<int>>& sets, const std::vector<int>& rep) {
  SideMasks s;
  s.words = m.words;
  s.p.resize(sets.size() * m.words);
  s.n.resize(sets.size() * m.words);
  const auto ones = all_boxes(m.box_count, m.words);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::uint64_t* p = &s.p[i * m.words];
    std::uint64_t* n = &s.n[i * m.words];
    std::copy(ones.begin(), ones.end(), p);
    std::copy(ones.begin(), ones.end(), n);
    for (int c : sets[i]) {
      const std::uint64_t* fp = m.p_mask(rep[c]);
      const std::uint64_t* fn = m.n_mask(rep[c]);
      for (std::size_t w = 0; w < m.words; ++w) {
        p[w] &= fp[w];
        n[w] &= fn[w];
      }
    }
  }
  return s;
}

inline bool meet(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w)
    if (a[w] & b[w]) return true;
  return false;
}

inline bool disagrees(bool fa, bool fb, VerdictMode mode) {
  return mode == VerdictMode::equal ? fa != fb : (!fa && fb);
}

void check_models(const BoxModel& a, const BoxModel& b, int max_side) {
  if (a.formula_count != b.formula_count) throw DomainError("models cover different formula counts");
  if (max_side < 0) throw DomainError("max_side must be non-negative");
}

}  // namespace

AgreementResult compare_verdicts(const BoxModel& a, const BoxModel& b, int max_side, VerdictMode mode, Exec exec) {
  check_models(a, b, max_side);
  const std::size_t n = a.formula_count;

  // Formulas with identical masks in both models behave identically in every argument.
  std::map<std::vector<std::uint64_t>, int> class_of_key;
  std::vector<int> rep;
  for (std::size_t f = 0; f < n; ++f) {
    std::vector<std::uint64_t> key;
    key.insert(key.end(), a.p_mask(f), a.p_mask(f) + a.words);
    key.insert(key.end(), a.n_mask(f), a.n_mask(f) + a.words);
    key.insert(key.end(), b.p_mask(f), b.p_mask(f) + b.words);
    key.insert(key.end(), b.n_mask(f), b.n_mask(f) + b.words);
    auto [it, fresh] = class_of_key.emplace(std::move(key), static_cast<int>(rep.size()));
    if (fresh) rep.push_back(static_cast<int>(f));
  }

  const auto sets = small_subsets(static_cast<int>(rep.size()), max_side);
  const SideMasks ma = side_masks(a, sets, rep);
  const SideMasks mb = side_masks(b, sets, rep);
  const std::int64_t S = static_cast<std::int64_t>(sets.size());
  const std::size_t wa = ma.words, wb = mb.words;

  std::uint64_t count = 0;
  std::int64_t first = std::numeric_limits<std::int64_t>::max();

  auto row = [&](std::int64_t i, std::uint64_t& cnt, std::int64_t& fst) {
    const std::uint64_t* pa = &ma.p[i * wa];
    const std::uint64_t* pb = &mb.p[i * wb];
    for (std::int64_t j = 0; j < S; ++j) {
      bool fa, fb;
      if (wa == 1 && wb == 1) {
        fa = (pa[0] & ma.n[j]) != 0;
        fb = (pb[0] & mb.n[j]) != 0;
      } else {
        fa = meet(pa, &ma.n[j * wa], wa);
        fb = meet(pb, &mb.n[j * wb], wb);
      }
      if (disagrees(fa, fb, mode)) {
        ++cnt;
        fst = std::min(fst, i * S + j);
      }
    }
  };

  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : count) reduction(min : first)
    for (std::int64_t i = 0; i < S; ++i) row(i, count, first);
  } else {
    for (std::int64_t i = 0; i < S; ++i) row(i, count, first);
  }

  AgreementResult r;
  r.arguments = binomial_prefix(n, max_side) * binomial_prefix(n, max_side);
  r.evaluations = static_cast<std::uint64_t>(S) * static_cast<std::uint64_t>(S);
  r.disagreements = count;
  if (count) {
    Argument arg;
    for (int c : sets[first / S]) arg.premises.push_back(rep[c]);
    for (int c : sets[first % S]) arg.conclusions.push_back(rep[c]);
    r.first = std::move(arg);
  }
  return r;
}

AgreementResult compare_verdicts_reference(const BoxModel& a, const BoxModel& b, int max_side, VerdictMode mode) {
  check_models(a, b, max_side);
  const auto sets = small_subsets(static_cast<int>(a.formula_count), max_side);
  AgreementResult r;
  for (const auto& g : sets)
    for (const auto& d : sets) {
      ++r.arguments;
      ++r.evaluations;
      if (disagrees(a.fails(g, d), b.fails(g, d), mode)) {
        ++r.disagreements;
        if (!r.first) r.first = Argument{g, d};
      }
    }
  return r;
}

}  // namespace mvl
