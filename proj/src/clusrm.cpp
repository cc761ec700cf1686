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

#include "redesc/clusrm.hpp"

#include <algorithm>
#include <thread>

#include "redesc/errors.hpp"
#include "redesc/grsc.hpp"
#include "redesc/parallel.hpp"
#include "redesc/text.hpp"

namespace redesc {

std::string_view operator_mode_name(OperatorMode mode) {
  switch (mode) {
    case OperatorMode::kConjunctive:
      return "conj";
    case OperatorMode::kConjunctiveNegation:
      return "conjneg";
    case OperatorMode::kAll:
      return "all";
  }
  return "conjneg";
}

OperatorMode parse_operator_mode(std::string_view text) {
  const std::string t = text::to_lower(text::trim(text));
  if (t == "conj" || t == "conjunctive") return OperatorMode::kConjunctive;
  if (t == "conjneg" || t == "conj+neg" || t == "conjunctive-negation") {
    return OperatorMode::kConjunctiveNegation;
  }
  if (t == "all") return OperatorMode::kAll;
  throw ConfigError("unknown operator mode '" + std::string(text) +
                    "' (expected conj, conjneg or all)");
}

void MiningParams::validate() const {
  if (max_iter < 1) throw ConfigError("max_iter must be at least 1");
  pct.validate();
  if (target_window < 1) throw ConfigError("target_window must be at least 1");
  if (disjunction_threshold > 1.0) {
    throw ConfigError("disjunction_threshold must not exceed 1");
  }
}

RuleSet::RuleSet(const Dataset& data, OperatorMode mode)
    : data_(&data), mode_(mode) {}

bool RuleSet::add(Query q) {
  const bool first_view = q.view_id() == 1;
  auto& all = first_view ? all1_ : all2_;
  auto& seen = first_view ? seen1_ : seen2_;
  const std::size_t h = hash_query(q);
  auto [lo, hi] = seen.equal_range(h);
  for (auto it = lo; it != hi; ++it) {
    if (all[it->second].query == q) return false;
  }
  TriSupport tri = tri_support(q, data_->view(q.view_id()));
  seen.emplace(h, all.size());
  all.push_back(RuleEntry{std::move(q), std::move(tri)});
  if (mode_ != OperatorMode::kConjunctive || !all.back().query.has_negation()) {
    (first_view ? usable1_ : usable2_).push_back(all.back());
  }
  return true;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

PctParams tree_params(const MiningParams& params, std::size_t min_leaf) {
  PctParams p = params.pct;
  p.min_leaf = min_leaf;
  return p;
}

}  // namespace

RuleSet init_rules(const Dataset& data, const MiningParams& params,
                   std::size_t min_leaf) {
  RuleSet rules(data, params.operator_mode);
  const PctParams p = tree_params(params, min_leaf);
  for (int view_id = 1; view_id <= 2; ++view_id) {
    const View& view = data.view(view_id);
    // A column permutation keeps every marginal, which makes the gain of
    // every root split exactly zero; resampled columns do not.
    const View doubled =
        view.concat_rows(make_resampled(view, mix_seed(params.seed, view_id)));
    TargetMatrix targets(doubled.num_rows(), 1);
    for (std::size_t r = 0; r < view.num_rows(); ++r) targets.set(r, 0, true);
    const Tree tree = build_tree(doubled, targets, p);
    for (Rule& rule : extract_rules(tree, doubled, view_id)) {
      rules.add(std::move(rule.query));
    }
  }
  return rules;
}

TargetMatrix construct_targets(std::span<const RuleEntry> rules,
                               std::size_t num_elements, std::size_t window) {
  if (rules.empty()) throw Error("no rules to build targets from");
  const std::size_t first = rules.size() > window ? rules.size() - window : 0;
  TargetMatrix t(num_elements, rules.size() - first);
  for (std::size_t j = first; j < rules.size(); ++j) {
    rules[j].tri.in.for_each([&](std::size_t e) { t.set(e, j - first, true); });
  }
  return t;
}

std::vector<Redescription> create_redescriptions(
    std::span<const RuleEntry> rules1, std::span<const RuleEntry> rules2,
    std::size_t from1, std::size_t from2, const Constraints& constraints,
    double min_jaccard, bool full_check, std::size_t view1_attributes,
    std::size_t workers) {
  // One slot per row keeps the merged order independent of scheduling.
  std::vector<std::vector<Redescription>> rows(rules1.size());
  parallel_for(rules1.size(), workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::size_t j0 = i >= from1 ? 0 : from2;
      for (std::size_t j = j0; j < rules2.size(); ++j) {
        const StatusCounts c = count_statuses(rules1[i].tri, rules2[j].tri);
        if (jaccard_variants(c).qnm < min_jaccard) continue;
        if (full_check) {
          const std::size_t s = c.at(Status::kIn, Status::kIn);
          if (s < constraints.min_support || s > constraints.max_support) continue;
          if (p_value(c, rules1[i].tri.in.universe()) > constraints.max_pvalue) {
            continue;
          }
        }
        rows[i].push_back(Redescription::from_supports(
            rules1[i].query, rules2[j].query, rules1[i].tri, rules2[j].tri,
            view1_attributes));
      }
    }
  });

  std::vector<Redescription> out;
  for (auto& row : rows) {
    for (auto& r : row) out.push_back(std::move(r));
  }
  return out;
}

Redescription combine_disjunctive(const Redescription& base, const RuleSet& rules,
                                  const Constraints& constraints,
                                  std::size_t max_disjuncts,
                                  std::size_t view1_attributes) {
  Redescription current = base;
  std::size_t added[2] = {0, 0};
  while (true) {
    int best_side = 0;
    std::size_t best_rule = 0;
    double best_j = current.jaccard();
    for (int side = 1; side <= 2; ++side) {
      if (added[side - 1] >= max_disjuncts) continue;
      const auto list = rules.rules(side);
      const TriSupport& mine = side == 1 ? current.tri1() : current.tri2();
      const TriSupport& other = side == 1 ? current.tri2() : current.tri1();
      for (std::size_t k = 0; k < list.size(); ++k) {
        if (!list[k].query.is_conjunctive()) continue;
        const TriSupport merged = tri_or(mine, list[k].tri);
        const StatusCounts c = side == 1 ? count_statuses(merged, other)
                                         : count_statuses(other, merged);
        const double j = jaccard_variants(c).qnm;
        if (!(j > best_j)) continue;
        const std::size_t s = c.at(Status::kIn, Status::kIn);
        if (s < constraints.min_support || s > constraints.max_support) continue;
        if (p_value(c, merged.in.universe()) > constraints.max_pvalue) continue;
        best_side = side;
        best_rule = k;
        best_j = j;
      }
    }
    if (best_side == 0) break;
    const RuleEntry& rule = rules.rules(best_side)[best_rule];
    if (best_side == 1) {
      current = Redescription::from_supports(
          disjoin(current.q1(), rule.query), current.q2(),
          tri_or(current.tri1(), rule.tri), current.tri2(), view1_attributes);
    } else {
      current = Redescription::from_supports(
          current.q1(), disjoin(current.q2(), rule.query), current.tri1(),
          tri_or(current.tri2(), rule.tri), view1_attributes);
    }
    ++added[best_side - 1];
  }
  return current;
}

namespace {

void enforce_cap(RedescriptionSet& set, const MiningParams& params,
                 const Dataset& data, MiningReport& report) {
  if (params.max_set_size == 0 || set.size() <= params.max_set_size) return;
  const ReducedSet reduced =
      reduce_one(set.items(), default_weight_rows()[0], params.max_set_size,
                 std::nullopt, data.num_elements(), data.num_attributes());
  std::vector<std::size_t> keep = reduced.members;
  std::sort(keep.begin(), keep.end());
  std::vector<Redescription> items;
  items.reserve(keep.size());
  for (std::size_t i : keep) items.push_back(set[i]);
  set.assign(std::move(items));
  ++report.reductions;
}

}  // namespace

RedescriptionSet mine(const Dataset& data, const Constraints& constraints,
                      const MiningParams& params, MiningReport* report_out) {
  constraints.validate();
  params.validate();
  MiningReport report;
  const std::size_t min_leaf =
      params.min_leaf != 0 ? params.min_leaf
                           : std::max<std::size_t>(2, constraints.min_support / 2);
  const PctParams tree = tree_params(params, min_leaf);
  const std::size_t n = data.num_elements();
  const std::size_t v1 = data.view1.num_attributes();
  const double disjunction_threshold = params.disjunction_threshold < 0.0
                                           ? constraints.min_jaccard
                                           : params.disjunction_threshold;

  RuleSet rules = init_rules(data, params, min_leaf);
  RedescriptionSet set(params.unique_support);
  std::size_t seen1 = 0;
  std::size_t seen2 = 0;

  for (int it = 0; it < params.max_iter; ++it) {
    // Both trees read the rule lists as they stood at the start of the round.
    std::vector<Rule> new1;
    std::vector<Rule> new2;
    const auto grow = [&](int view_id, std::vector<Rule>& out) {
      const auto opposing = rules.all_rules(view_id == 1 ? 2 : 1);
      if (opposing.empty()) return;
      const TargetMatrix targets = construct_targets(opposing, n, params.target_window);
      const View& view = data.view(view_id);
      out = extract_rules(build_tree(view, targets, tree), view, view_id);
    };
    if (params.workers > 1) {
      std::thread t([&] { grow(2, new2); });
      grow(1, new1);
      t.join();
    } else {
      grow(1, new1);
      grow(2, new2);
    }
    for (Rule& r : new1) rules.add(std::move(r.query));
    for (Rule& r : new2) rules.add(std::move(r.query));

    const double threshold =
        params.use_refinement ? constraints.min_ref_jaccard : constraints.min_jaccard;
    std::vector<Redescription> candidates = create_redescriptions(
        rules.rules(1), rules.rules(2), seen1, seen2, constraints, threshold,
        !params.use_refinement, v1, params.workers);
    seen1 = rules.size(1);
    seen2 = rules.size(2);
    report.candidates += candidates.size();

    for (Redescription& cand : candidates) {
      if (params.operator_mode == OperatorMode::kAll && constraints.accepts(cand) &&
          cand.jaccard() >= disjunction_threshold && cand.jaccard() < 1.0) {
        Redescription d = combine_disjunctive(cand, rules, constraints,
                                              params.max_disjuncts, v1);
        if (d.jaccard() > cand.jaccard()) {
          const auto result = set.insert(std::move(d));
          if (result == RedescriptionSet::Insert::kAdded ||
              result == RedescriptionSet::Insert::kReplaced) {
            ++report.disjunctive_added;
          }
        }
      }
      if (params.use_refinement) {
        refine_into(set, std::move(cand), constraints, data);
      } else {
        set.insert(std::move(cand));
      }
    }
    enforce_cap(set, params, data, report);
    report.iterations = static_cast<std::size_t>(it) + 1;
  }

  // Post-pass: every member must satisfy the constraints.
  std::vector<Redescription> items = set.release();
  std::erase_if(items, [&](const Redescription& r) { return !constraints.accepts(r); });
  set.assign(std::move(items));

  report.rules1 = rules.size(1);
  report.rules2 = rules.size(2);
  if (report_out) *report_out = report;
  return set;
}

}  // namespace redesc
