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

#include "redesc/redescription_set.hpp"

namespace redesc {

std::size_t RedescriptionSet::pair_hash(const Query& q1, const Query& q2) {
  return hash_query(q1) * 31 + hash_query(q2);
}

void RedescriptionSet::index(std::size_t i) {
  const Redescription& r = items_[i];
  by_pair_.emplace(pair_hash(r.q1(), r.q2()), i);
  by_support_.emplace(r.support().hash(), i);
}

void RedescriptionSet::unindex(std::size_t i) {
  const Redescription& r = items_[i];
  const auto erase_one = [i](auto& map, std::size_t key) {
    auto [lo, hi] = map.equal_range(key);
    for (auto it = lo; it != hi; ++it) {
      if (it->second == i) {
        map.erase(it);
        return;
      }
    }
  };
  erase_one(by_pair_, pair_hash(r.q1(), r.q2()));
  erase_one(by_support_, r.support().hash());
}

std::optional<std::size_t> RedescriptionSet::find_support(
    const ElementSet& support) const {
  auto [lo, hi] = by_support_.equal_range(support.hash());
  for (auto it = lo; it != hi; ++it) {
    if (items_[it->second].support() == support) return it->second;
  }
  return std::nullopt;
}

bool RedescriptionSet::contains_pair(const Query& q1, const Query& q2) const {
  auto [lo, hi] = by_pair_.equal_range(pair_hash(q1, q2));
  for (auto it = lo; it != hi; ++it) {
    const Redescription& r = items_[it->second];
    if (r.q1() == q1 && r.q2() == q2) return true;
  }
  return false;
}

RedescriptionSet::Insert RedescriptionSet::insert(Redescription r) {
  if (contains_pair(r.q1(), r.q2())) return Insert::kDuplicate;
  if (unique_support_) {
    if (auto existing = find_support(r.support())) {
      if (r.jaccard() > items_[*existing].jaccard()) {
        update(*existing, std::move(r));
        return Insert::kReplaced;
      }
      return Insert::kDominated;
    }
  }
  items_.push_back(std::move(r));
  index(items_.size() - 1);
  return Insert::kAdded;
}

void RedescriptionSet::update(std::size_t i, Redescription r) {
  unindex(i);
  items_[i] = std::move(r);
  index(i);
}

void RedescriptionSet::assign(std::vector<Redescription> items) {
  items_.clear();
  by_pair_.clear();
  by_support_.clear();
  for (auto& r : items) insert(std::move(r));
}

}  // namespace redesc
