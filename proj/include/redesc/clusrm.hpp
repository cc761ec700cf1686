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
#include <string_view>
#include <unordered_map>
#include <vector>

#include "redesc/dataset.hpp"
#include "redesc/pct.hpp"
#include "redesc/redescription_set.hpp"
#include "redesc/refine.hpp"

namespace redesc {

enum class OperatorMode { kConjunctive, kConjunctiveNegation, kAll };

std::string_view operator_mode_name(OperatorMode mode);
// Accepts conj|conjneg|all and the long forms; throws ConfigError.
OperatorMode parse_operator_mode(std::string_view text);

struct MiningParams {
  int max_iter = 10;
  PctParams pct;
  // 0 means max(2, min_support / 2).
  std::size_t min_leaf = 0;
  std::uint64_t seed = 0;
  bool use_refinement = true;
  OperatorMode operator_mode = OperatorMode::kConjunctiveNegation;
  // Only the most recent rules of the opposing view become targets.
  std::size_t target_window = 64;
  bool unique_support = true;
  // Negative means min_jaccard.
  double disjunction_threshold = -1.0;
  std::size_t max_disjuncts = 2;
  // Accumulated sets above this size are reduced; 0 disables the cap.
  std::size_t max_set_size = 50000;
  std::size_t workers = 1;

  void validate() const;
};

// Per-view rule lists, deduplicated by canonical query. Every extracted rule
// feeds the target matrices; only those allowed by the operator mode are
// paired into redescriptions.
class RuleSet {
 public:
  RuleSet(const Dataset& data, OperatorMode mode);

  // Evaluates `q` on its view and appends it unless already present.
  // Returns true when added.
  bool add(Query q);

  // Rules usable in redescriptions.
  std::span<const RuleEntry> rules(int view_id) const {
    return view_id == 1 ? usable1_ : usable2_;
  }
  std::size_t size(int view_id) const { return rules(view_id).size(); }
  // Every extracted rule, in extraction order.
  std::span<const RuleEntry> all_rules(int view_id) const {
    return view_id == 1 ? all1_ : all2_;
  }

 private:
  const Dataset* data_;
  OperatorMode mode_;
  std::vector<RuleEntry> all1_;
  std::vector<RuleEntry> all2_;
  std::vector<RuleEntry> usable1_;
  std::vector<RuleEntry> usable2_;
  std::unordered_multimap<std::size_t, std::size_t> seen1_;
  std::unordered_multimap<std::size_t, std::size_t> seen2_;
};

RuleSet init_rules(const Dataset& data, const MiningParams& params,
                   std::size_t min_leaf);

// Column j is the TRUE set of the j-th of the last `window` rules.
TargetMatrix construct_targets(std::span<const RuleEntry> rules,
                               std::size_t num_elements, std::size_t window);

// Scores the pairs rules1[i] x rules2[j] with i >= from1 or j >= from2 and
// returns those with J >= `min_jaccard` (pairs in row-major order).
// Remaining constraints are applied when `full_check` is set.
std::vector<Redescription> create_redescriptions(
    std::span<const RuleEntry> rules1, std::span<const RuleEntry> rules2,
    std::size_t from1, std::size_t from2, const Constraints& constraints,
    double min_jaccard, bool full_check, std::size_t view1_attributes,
    std::size_t workers);

// Greedily ORs same-view conjunctive rules into either query while J
// strictly increases and the constraints hold.
Redescription combine_disjunctive(const Redescription& base, const RuleSet& rules,
                                  const Constraints& constraints,
                                  std::size_t max_disjuncts,
                                  std::size_t view1_attributes);

struct MiningReport {
  std::size_t iterations = 0;
  std::size_t rules1 = 0;
  std::size_t rules2 = 0;
  std::size_t candidates = 0;
  std::size_t disjunctive_added = 0;
  std::size_t reductions = 0;
};

RedescriptionSet mine(const Dataset& data, const Constraints& constraints,
                      const MiningParams& params, MiningReport* report = nullptr);

}  // namespace redesc
