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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace mvl {

// A set of truth values, bit i = value index i.
using ValueSet = std::uint32_t;

inline constexpr int kMaxValues = 31;

inline constexpr ValueSet full_set(int n) { return n >= 32 ? ~ValueSet{0} : (ValueSet{1} << n) - 1; }
inline constexpr ValueSet singleton(int x) { return ValueSet{1} << x; }
inline constexpr bool contains(ValueSet s, int x) { return (s >> x) & 1u; }
inline constexpr bool subset_of(ValueSet a, ValueSet b) { return (a & ~b) == 0; }
inline int popcount(ValueSet s) { return std::popcount(s); }

std::vector<int> members_of(ValueSet s);

// Fixed-size dynamic bitset; formula sets over fragment indices and box masks.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }
  std::size_t word_count() const { return words_.size(); }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set_all();
  bool any() const;
  std::size_t count() const;
  bool subset_of(const BitSet& o) const;
  bool intersects(const BitSet& o) const;
  BitSet& operator&=(const BitSet& o);
  BitSet& operator|=(const BitSet& o);
  std::vector<std::size_t> indices() const;

  const std::uint64_t* data() const { return words_.data(); }
  std::uint64_t* data() { return words_.data(); }

  friend bool operator==(const BitSet&, const BitSet&) = default;
  friend auto operator<=>(const BitSet& a, const BitSet& b) { return a.words_ <=> b.words_; }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace mvl
