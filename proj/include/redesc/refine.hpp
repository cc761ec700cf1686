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

#include <optional>

#include "redesc/measures.hpp"
#include "redesc/redescription_set.hpp"

namespace redesc {

struct RefinementOutcome {
  Redescription refined;
  bool applied = false;   // support containment held and ref was usable
  bool improved = false;  // J strictly increased
};

// Shrinks every non-negated numeric interval of a conjunctive query to the
// observed range of `target` inside it. Returns nullopt for a query that is
// not a plain conjunction.
std::optional<Query> tighten_query(const Query& q, const ElementSet& target,
                                   const View& view);

// tighten_query on both sides of `ref`; nullopt when either side is not
// conjunctive. target ⊆ supp(ref) gives target ⊆ supp(result) ⊆ supp(ref).
std::optional<Redescription> tighten_bounds(const Redescription& ref,
                                            const ElementSet& target,
                                            const Dataset& data);

// Conjoins r with the tightened ref when supp(r) ⊆ supp(ref). The result
// keeps supp(r) and never lowers J.
RefinementOutcome refine_pair(const Redescription& r, const Redescription& ref,
                              const Dataset& data);

// One step of the set refinement loop: refines every current member with
// `candidate` and the candidate with every member, in member order, then
// inserts the candidate when it meets `constraints`. A member is replaced
// only by a strictly better version that still meets the constraints.
RedescriptionSet::Insert refine_into(RedescriptionSet& set,
                                     Redescription candidate,
                                     const Constraints& constraints,
                                     const Dataset& data);

struct RuleEntry {
  Query query;
  TriSupport tri;
};

// Every pair from rules1 x rules2 with J >= min_ref_jaccard goes through
// refine_into, in row-major pair order.
void construct_and_refine(std::span<const RuleEntry> rules1,
                          std::span<const RuleEntry> rules2,
                          RedescriptionSet& set, const Constraints& constraints,
                          const Dataset& data);

}  // namespace redesc
