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

#include "redesc/refine.hpp"

#include <algorithm>
#include <limits>

namespace redesc {

std::optional<Query> tighten_query(const Query& q, const ElementSet& target,
                                   const View& view) {
  if (!q.is_conjunctive()) return std::nullopt;
  std::vector<Literal> lits = q.conjuncts();
  if (target.empty()) return q;
  for (Literal& l : lits) {
    if (l.kind != AttributeKind::kNumeric || l.negated) continue;
    const auto column = view.column(static_cast<std::size_t>(l.attribute));
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    target.for_each([&](std::size_t e) {
      const double v = column[e];
      if (is_missing(v)) return;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    });
    if (lo > hi) continue;
    if (lo > l.interval.lo) {
      l.interval.lo = lo;
      l.interval.lo_open = false;
    }
    if (hi < l.interval.hi) {
      l.interval.hi = hi;
      l.interval.hi_open = false;
    }
  }
  return Query::from_literals(q.view_id(), std::move(lits));
}

std::optional<Redescription> tighten_bounds(const Redescription& ref,
                                            const ElementSet& target,
                                            const Dataset& data) {
  auto q1 = tighten_query(ref.q1(), target, data.view1);
  auto q2 = tighten_query(ref.q2(), target, data.view2);
  if (!q1 || !q2) return std::nullopt;
  return Redescription::evaluate(std::move(*q1), std::move(*q2), data);
}

namespace {

// Shared body of refine_pair. With `only_if_improved`, returns nullopt
// unless J strictly increases, skipping query minimization otherwise.
std::optional<Redescription> conjoin_refined(const Redescription& r,
                                             const Redescription& ref,
                                             const Dataset& data,
                                             bool only_if_improved) {
  if (!r.support().is_subset_of(ref.support())) return std::nullopt;
  if (only_if_improved && r.jaccard() >= 1.0) return std::nullopt;
  auto tightened = tighten_bounds(ref, r.support(), data);
  if (!tightened) return std::nullopt;

  TriSupport t1 = tri_and(r.tri1(), tightened->tri1());
  TriSupport t2 = tri_and(r.tri2(), tightened->tri2());
  if (only_if_improved &&
      !(jaccard_variants(count_statuses(t1, t2)).qnm > r.jaccard())) {
    return std::nullopt;
  }
  // Minimization keeps both TRUE and UNKNOWN sets, so the conjunction's
  // supports carry over unchanged.
  Query q1 = minimize_query(conjoin(r.q1(), tightened->q1()), data.view1);
  Query q2 = minimize_query(conjoin(r.q2(), tightened->q2()), data.view2);
  return Redescription::from_supports(std::move(q1), std::move(q2), std::move(t1),
                                      std::move(t2), data.view1.num_attributes());
}

}  // namespace

RefinementOutcome refine_pair(const Redescription& r, const Redescription& ref,
                              const Dataset& data) {
  RefinementOutcome out;
  auto refined = conjoin_refined(r, ref, data, false);
  if (!refined) {
    out.refined = r;
    return out;
  }
  out.refined = std::move(*refined);
  out.applied = true;
  out.improved = out.refined.jaccard() > r.jaccard();
  return out;
}

RedescriptionSet::Insert refine_into(RedescriptionSet& set,
                                     Redescription candidate,
                                     const Constraints& constraints,
                                     const Dataset& data) {
  Redescription original = candidate;
  const std::size_t members = set.size();
  for (std::size_t i = 0; i < members; ++i) {
    auto member = conjoin_refined(set[i], candidate, data, true);
    if (member && constraints.accepts(*member) &&
        !set.contains_pair(member->q1(), member->q2())) {
      set.update(i, std::move(*member));
    }
    if (auto better = conjoin_refined(candidate, set[i], data, true)) {
      candidate = std::move(*better);
    }
  }
  if (constraints.accepts(candidate)) return set.insert(std::move(candidate));
  if (constraints.accepts(original)) return set.insert(std::move(original));
  return RedescriptionSet::Insert::kDominated;
}

void construct_and_refine(std::span<const RuleEntry> rules1,
                          std::span<const RuleEntry> rules2,
                          RedescriptionSet& set, const Constraints& constraints,
                          const Dataset& data) {
  const std::size_t v1 = data.view1.num_attributes();
  for (const RuleEntry& a : rules1) {
    for (const RuleEntry& b : rules2) {
      const StatusCounts c = count_statuses(a.tri, b.tri);
      if (jaccard_variants(c).qnm < constraints.min_ref_jaccard) continue;
      refine_into(set, Redescription::from_supports(a.query, b.query, a.tri, b.tri, v1),
                  constraints, data);
    }
  }
}

}  // namespace redesc
