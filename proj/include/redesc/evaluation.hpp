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
#include <span>
#include <string>

#include "redesc/measures.hpp"

namespace redesc {

// log10 of a p-value floored at 1e-17.
double floored_log10_pvalue(double pv);

struct SetSummary {
  std::size_t size = 0;
  double element_coverage = 0.0;    // fraction of E in the union of supports
  double attribute_coverage = 0.0;  // fraction of all attributes used
  double mean_jaccard = 0.0;
  double mean_log10_pvalue = 0.0;
  double mean_aej = 0.0;
  double mean_aaj = 0.0;
  double mean_normalized_query_size = 0.0;  // mean score_size
  double mean_variability = 0.0;
};

SetSummary summarize(std::span<const Redescription> items, const Dataset& data);

// CSV with one row per redescription.
std::string format_eval_rows(std::span<const Redescription> items,
                             const Dataset& data);
// Two-line CSV (header, values).
std::string format_eval_summary(const SetSummary& s);

}  // namespace redesc
