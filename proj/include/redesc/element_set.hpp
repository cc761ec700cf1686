// Copyright 2026 The redesc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace redesc {

// Fixed-universe bitset over element (row) indices 0..universe-1. Bits past
// the universe are always zero, which the popcount kernels rely on.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, std::initializer_list<std::size_t> members);

  static ElementSet full(std::size_t universe);
  static ElementSet from_indices(std::size_t universe,
                                 std::span<const std::size_t> members);

  std::size_t universe() const { return universe_; }
  std::size_t count() const;
  bool empty() const;

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t intersection_count(const ElementSet& other) const;
  std::size_t union_count(const ElementSet& other) const;
  // this ⊆ other
  bool is_subset_of(const ElementSet& other) const;

  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator|=(const ElementSet& other);
  // this &= ~other
  ElementSet& subtract(const ElementSet& other);
  ElementSet complement() const;

  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    return a &= b;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    return a |= b;
  }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  std::vector<std::size_t> indices() const;
  std::size_t hash() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutable_words() { return words_; }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        fn(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

 private:
  void clear_tail();

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// |a∩b| / |a∪b|, 0 when both are empty.
double jaccard(const ElementSet& a, const ElementSet& b);

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace redesc
