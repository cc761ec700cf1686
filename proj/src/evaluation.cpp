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

#include "redesc/evaluation.hpp"

#include <algorithm>
#include <cmath>

#include "redesc/text.hpp"

namespace redesc {

double floored_log10_pvalue(double pv) {
  return std::log10(std::max(pv, 1e-17));
}

SetSummary summarize(std::span<const Redescription> items, const Dataset& data) {
  SetSummary s;
  s.size = items.size();
  if (items.empty()) return s;

  ElementSet covered(data.num_elements());
  std::vector<bool> used(data.num_attributes(), false);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Redescription& r = items[i];
    covered |= r.support();
    for (int a : r.attributes()) used[static_cast<std::size_t>(a)] = true;
    s.mean_jaccard += r.jaccard();
    s.mean_log10_pvalue += floored_log10_pvalue(r.stats().p_value);
    s.mean_aej += average_element_jaccard(i, items);
    s.mean_aaj += average_attribute_jaccard(i, items);
    s.mean_normalized_query_size += score_size(r.query_size());
    s.mean_variability += r.variability();
  }
  const double n = static_cast<double>(items.size());
  s.mean_jaccard /= n;
  s.mean_log10_pvalue /= n;
  s.mean_aej /= n;
  s.mean_aaj /= n;
  s.mean_normalized_query_size /= n;
  s.mean_variability /= n;
  if (data.num_elements() > 0) {
    s.element_coverage = static_cast<double>(covered.count()) /
                         static_cast<double>(data.num_elements());
  }
  if (data.num_attributes() > 0) {
    s.attribute_coverage =
        static_cast<double>(std::count(used.begin(), used.end(), true)) /
        static_cast<double>(data.num_attributes());
  }
  return s;
}

std::string format_eval_rows(std::span<const Redescription> items,
                             const Dataset& data) {
  using text::format_double;
  std::string out =
      "index,q1,q2,j_qnm,j_opt,j_pess,p_value,log10_p_value,variability,"
      "support_size,query_size,aej,aaj\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Redescription& r = items[i];
    const RedescriptionStats& s = r.stats();
    out += std::to_string(i) + ',' + text::quote_csv(print_query(r.q1(), data.view1)) +
           ',' + text::quote_csv(print_query(r.q2(), data.view2)) + ',' +
           format_double(s.j_qnm) + ',' + format_double(s.j_opt) + ',' +
           format_double(s.j_pess) + ',' + format_double(s.p_value) + ',' +
           format_double(floored_log10_pvalue(s.p_value)) + ',' +
           format_double(s.variability()) + ',' + std::to_string(s.support_size) +
           ',' + std::to_string(r.query_size()) + ',' +
           format_double(average_element_jaccard(i, items)) + ',' +
           format_double(average_attribute_jaccard(i, items)) + '\n';
  }
  return out;
}

std::string format_eval_summary(const SetSummary& s) {
  using text::format_double;
  return "size,element_coverage,attribute_coverage,mean_jaccard,"
         "mean_log10_p_value,mean_aej,mean_aaj,mean_normalized_query_size,"
         "mean_variability\n" +
         std::to_string(s.size) + ',' + format_double(s.element_coverage) + ',' +
         format_double(s.attribute_coverage) + ',' + format_double(s.mean_jaccard) +
         ',' + format_double(s.mean_log10_pvalue) + ',' + format_double(s.mean_aej) +
         ',' + format_double(s.mean_aaj) + ',' + format_double(s.mean_normalized_query_size) +
         ',' + format_double(s.mean_variability) + '\n';
}

}  // namespace redesc
