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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "redesc/measures.hpp"

namespace redesc {

// Importance weights in table column order: J, pV, AJ, EJ, RQS, RV.
// EJ weighs the element terms and AJ the attribute terms.
struct WeightVector {
  double j = 0.0;
  double pv = 0.0;
  double aj = 0.0;
  double ej = 0.0;
  double rqs = 0.0;
  double rv = 0.0;

  static WeightVector from_array(const std::array<double, 6>& w);
  std::array<double, 6> to_array() const;
  // Throws ConfigError on negative or non-finite entries.
  void validate() const;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

// Weight rows for complete data, favouring J progressively more.
std::span<const WeightVector> default_weight_rows();
// Weight rows for data with missing values, favouring low variability.
std::span<const WeightVector> missing_value_weight_rows();

struct OccurrenceProfile {
  std::vector<std::uint32_t> elements;    // per element
  std::vector<std::uint32_t> attributes;  // per global attribute id
  std::uint64_t element_total = 0;
  std::uint64_t attribute_total = 0;
};

OccurrenceProfile compute_occurrence(std::span<const Redescription> set,
                                     std::size_t num_elements,
                                     std::size_t num_attributes);

// Score of the first pick; lower is better.
double specific_score(const Redescription& r, const OccurrenceProfile& profile,
                      const WeightVector& w);

// Score of a later pick, given the candidate's maximum support and
// attribute Jaccard against the set under construction (size k, target n).
double best_score(const Redescription& r, double element_similarity,
                  double attribute_similarity, const WeightVector& w,
                  std::size_t k, std::size_t n, std::size_t num_elements);

// Index of the argmin of specific_score; first index wins ties.
std::size_t find_specific(std::span<const Redescription> set,
                          const OccurrenceProfile& profile,
                          const WeightVector& w);

// Argmin of best_score over members not in `reduced`, with similarities
// recomputed against `reduced`. nullopt when nothing is left.
std::optional<std::size_t> find_best(std::span<const Redescription> set,
                                     std::span<const std::size_t> reduced,
                                     const WeightVector& w, std::size_t n,
                                     std::size_t num_elements);

struct ReducedSet {
  WeightVector weights;
  std::size_t target_size = 0;
  // Indices into the input set, in selection order.
  std::vector<std::size_t> members;
  // Nothing survived the optional constraint re-filter.
  bool filtered_out = false;
};

ReducedSet reduce_one(std::span<const Redescription> set, const WeightVector& w,
                      std::size_t n, const std::optional<Constraints>& filter,
                      std::size_t num_elements, std::size_t num_attributes);

// One reduced set per weight row; rows run on up to `workers` threads.
std::vector<ReducedSet> reduce_set(std::span<const Redescription> set,
                                   std::span<const WeightVector> rows,
                                   std::size_t n,
                                   const std::optional<Constraints>& filter,
                                   std::size_t num_elements,
                                   std::size_t num_attributes,
                                   std::size_t workers = 1);

}  // namespace redesc
