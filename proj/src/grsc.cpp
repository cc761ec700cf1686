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

#include "redesc/grsc.hpp"

#include <cmath>
#include <numeric>

#include "redesc/errors.hpp"
#include "redesc/parallel.hpp"

namespace redesc {

WeightVector WeightVector::from_array(const std::array<double, 6>& w) {
  return WeightVector{w[0], w[1], w[2], w[3], w[4], w[5]};
}

std::array<double, 6> WeightVector::to_array() const {
  return {j, pv, aj, ej, rqs, rv};
}

void WeightVector::validate() const {
  for (double v : to_array()) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ConfigError("weights must be finite and non-negative");
    }
  }
}

std::span<const WeightVector> default_weight_rows() {
  static const WeightVector rows[] = {
      {0.2, 0.2, 0.2, 0.2, 0.2, 0.0},
      {0.4, 0.2, 0.1, 0.1, 0.2, 0.0},
      {0.6, 0.2, 0.0, 0.0, 0.2, 0.0},
      {0.0, 0.2, 0.3, 0.3, 0.2, 0.0},
  };
  return rows;
}

std::span<const WeightVector> missing_value_weight_rows() {
  static const WeightVector rows[] = {
      {0.2, 0.2, 0.2, 0.2, 0.19, 0.01},
      {0.18, 0.18, 0.18, 0.18, 0.18, 0.1},
      {0.14, 0.14, 0.14, 0.14, 0.14, 0.3},
      {0.1, 0.1, 0.1, 0.1, 0.1, 0.5},
      {0.06, 0.06, 0.06, 0.06, 0.06, 0.7},
  };
  return rows;
}

namespace {

OccurrenceProfile occurrence_of(std::span<const Redescription> set,
                                std::span<const std::size_t> pool, std::size_t num_elements,
                                std::size_t num_attributes) {
  OccurrenceProfile p;
  p.elements.assign(num_elements, 0);
  p.attributes.assign(num_attributes, 0);
  for (std::size_t i : pool) {
    const Redescription& r = set[i];
    r.support().for_each([&](std::size_t e) { ++p.elements[e]; });
    p.element_total += r.support().count();
    for (int a : r.attributes()) {
      if (static_cast<std::size_t>(a) >= num_attributes) {
        throw Error("attribute id out of range in occurrence profile");
      }
      ++p.attributes[static_cast<std::size_t>(a)];
    }
    p.attribute_total += r.attributes().size();
  }
  return p;
}

}  // namespace

OccurrenceProfile compute_occurrence(std::span<const Redescription> set,
                                     std::size_t num_elements,
                                     std::size_t num_attributes) {
  std::vector<std::size_t> all(set.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return occurrence_of(set, all, num_elements, num_attributes);
}

double specific_score(const Redescription& r, const OccurrenceProfile& profile,
                      const WeightVector& w) {
  return w.j * (1.0 - r.jaccard()) + w.pv * score_pvalue(r.stats().p_value) +
         w.ej * score_element_occurrence(r.support(), profile.elements,
                                         profile.element_total) +
         w.aj * score_attribute_occurrence(r.attributes(), profile.attributes,
                                           profile.attribute_total) +
         w.rqs * score_size(r.query_size()) + w.rv * r.variability();
}

double best_score(const Redescription& r, double element_similarity,
                  double attribute_similarity, const WeightVector& w,
                  std::size_t k, std::size_t n, std::size_t num_elements) {
  const double blend = static_cast<double>(k) / static_cast<double>(n);
  const double support_fraction =
      num_elements == 0 ? 0.0
                        : static_cast<double>(r.support().count()) /
                              static_cast<double>(num_elements);
  return w.j * (1.0 - r.jaccard()) +
         w.pv * (blend * score_pvalue(r.stats().p_value) +
                 (1.0 - blend) * support_fraction) +
         w.ej * element_similarity + w.aj * attribute_similarity +
         w.rqs * score_size(r.query_size()) + w.rv * r.variability();
}

std::size_t find_specific(std::span<const Redescription> set,
                          const OccurrenceProfile& profile,
                          const WeightVector& w) {
  if (set.empty()) throw Error("find_specific on an empty set");
  std::size_t best = 0;
  double best_value = specific_score(set[0], profile, w);
  for (std::size_t i = 1; i < set.size(); ++i) {
    const double s = specific_score(set[i], profile, w);
    if (s < best_value) {
      best_value = s;
      best = i;
    }
  }
  return best;
}

std::optional<std::size_t> find_best(std::span<const Redescription> set,
                                     std::span<const std::size_t> reduced,
                                     const WeightVector& w, std::size_t n,
                                     std::size_t num_elements) {
  std::vector<bool> taken(set.size(), false);
  for (std::size_t i : reduced) taken[i] = true;
  std::optional<std::size_t> best;
  double best_value = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (taken[i]) continue;
    double esim = 0.0;
    double asim = 0.0;
    for (std::size_t j : reduced) {
      esim = std::max(esim, jaccard(set[i].support(), set[j].support()));
      asim = std::max(asim, jaccard_sorted(set[i].attributes(), set[j].attributes()));
    }
    const double s = best_score(set[i], esim, asim, w, reduced.size(), n, num_elements);
    if (!best || s < best_value) {
      best = i;
      best_value = s;
    }
  }
  return best;
}

ReducedSet reduce_one(std::span<const Redescription> set, const WeightVector& w,
                      std::size_t n, const std::optional<Constraints>& filter,
                      std::size_t num_elements, std::size_t num_attributes) {
  if (n == 0) throw ConfigError("reduced set size must be at least 1");
  w.validate();
  ReducedSet out;
  out.weights = w;
  out.target_size = n;

  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!filter || filter->accepts(set[i])) pool.push_back(i);
  }
  if (pool.empty()) {
    out.filtered_out = true;
    return out;
  }

  const OccurrenceProfile profile =
      occurrence_of(set, pool, num_elements, num_attributes);
  std::size_t first = 0;
  double first_value = specific_score(set[pool[0]], profile, w);
  for (std::size_t p = 1; p < pool.size(); ++p) {
    const double s = specific_score(set[pool[p]], profile, w);
    if (s < first_value) {
      first_value = s;
      first = p;
    }
  }

  // Running maxima of each candidate's similarity to the picks so far.
  std::vector<double> esim(pool.size(), 0.0);
  std::vector<double> asim(pool.size(), 0.0);
  std::vector<bool> taken(pool.size(), false);
  std::size_t pick = first;
  while (true) {
    taken[pick] = true;
    out.members.push_back(pool[pick]);
    if (out.members.size() >= n || out.members.size() == pool.size()) break;

    const Redescription& last = set[pool[pick]];
    const std::size_t k = out.members.size();
    std::optional<std::size_t> best;
    double best_value = 0.0;
    for (std::size_t p = 0; p < pool.size(); ++p) {
      if (taken[p]) continue;
      const Redescription& r = set[pool[p]];
      esim[p] = std::max(esim[p], jaccard(r.support(), last.support()));
      asim[p] = std::max(asim[p], jaccard_sorted(r.attributes(), last.attributes()));
      const double s = best_score(r, esim[p], asim[p], w, k, n, num_elements);
      if (!best || s < best_value) {
        best = p;
        best_value = s;
      }
    }
    pick = *best;
  }
  return out;
}

std::vector<ReducedSet> reduce_set(std::span<const Redescription> set,
                                   std::span<const WeightVector> rows,
                                   std::size_t n,
                                   const std::optional<Constraints>& filter,
                                   std::size_t num_elements,
                                   std::size_t num_attributes,
                                   std::size_t workers) {
  std::vector<ReducedSet> out(rows.size());
  parallel_for(rows.size(), workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      out[i] = reduce_one(set, rows[i], n, filter, num_elements, num_attributes);
    }
  });
  return out;
}

}  // namespace redesc
