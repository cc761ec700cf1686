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

#include "redesc/element_set.hpp"

#include <cassert>

#include "redesc/kernels.hpp"

namespace redesc {

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_(kernels::words_for(universe), 0) {}

ElementSet::ElementSet(std::size_t universe,
                       std::initializer_list<std::size_t> members)
    : ElementSet(universe) {
  for (std::size_t m : members) set(m);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.clear_tail();
  return s;
}

ElementSet ElementSet::from_indices(std::size_t universe,
                                   std::span<const std::size_t> members) {
  ElementSet s(universe);
  for (std::size_t m : members) s.set(m);
  return s;
}

std::size_t ElementSet::count() const {
  return kernels::active().popcount(words_.data(), words_.size());
}

bool ElementSet::empty() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t ElementSet::intersection_count(const ElementSet& other) const {
  assert(universe_ == other.universe_);
  return kernels::active().popcount_and(words_.data(), other.words_.data(),
                                        words_.size());
}

std::size_t ElementSet::union_count(const ElementSet& other) const {
  assert(universe_ == other.universe_);
  return kernels::active().popcount_or(words_.data(), other.words_.data(),
                                       words_.size());
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::subtract(const ElementSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

ElementSet ElementSet::complement() const {
  ElementSet out(*this);
  for (auto& w : out.words_) w = ~w;
  out.clear_tail();
  return out;
}

std::vector<std::size_t> ElementSet::indices() const {
  std::vector<std::size_t> out;
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t ElementSet::hash() const {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ull ^ universe_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

void ElementSet::clear_tail() {
  const std::size_t rem = universe_ % 64;
  if (rem != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << rem) - 1;
  }
}

double jaccard(const ElementSet& a, const ElementSet& b) {
  const std::size_t uni = a.union_count(b);
  if (uni == 0) return 0.0;
  return static_cast<double>(a.intersection_count(b)) /
         static_cast<double>(uni);
}

}  // namespace redesc
