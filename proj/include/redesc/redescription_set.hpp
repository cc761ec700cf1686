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
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "redesc/measures.hpp"

namespace redesc {

// Accumulated, deduplicated collection of redescriptions. Two members never
// share an identical query pair; with `unique_support` no two members share
// supp(R) either, and a better-Jaccard redescription replaces the member
// holding its support.
class RedescriptionSet {
 public:
  enum class Insert { kAdded, kReplaced, kDuplicate, kDominated };

  explicit RedescriptionSet(bool unique_support = true)
      : unique_support_(unique_support) {}

  Insert insert(Redescription r);
  // Swaps member i for a refined version with the same support.
  void update(std::size_t i, Redescription r);
  // Rebuilds the set from `items`, applying the same dedup rules in order.
  void assign(std::vector<Redescription> items);

  std::optional<std::size_t> find_support(const ElementSet& support) const;
  bool contains_pair(const Query& q1, const Query& q2) const;

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool unique_support() const { return unique_support_; }
  const Redescription& operator[](std::size_t i) const { return items_[i]; }
  std::span<const Redescription> items() const { return items_; }
  std::vector<Redescription> release() { return std::move(items_); }

 private:
  static std::size_t pair_hash(const Query& q1, const Query& q2);
  void index(std::size_t i);
  void unindex(std::size_t i);

  bool unique_support_;
  std::vector<Redescription> items_;
  std::unordered_multimap<std::size_t, std::size_t> by_pair_;
  std::unordered_multimap<std::size_t, std::size_t> by_support_;
};

}  // namespace redesc
