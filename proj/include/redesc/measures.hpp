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
#include <limits>
#include <span>
#include <vector>

#include "redesc/dataset.hpp"
#include "redesc/element_set.hpp"
#include "redesc/query.hpp"

namespace redesc {

enum class Status : std::uint8_t { kIn = 0, kOut = 1, kUnknown = 2 };

// Joint status of every element under (q1, q2).
struct StatusCounts {
  std::array<std::array<std::size_t, 3>, 3> n{};

  std::size_t& at(Status s1, Status s2) {
    return n[static_cast<int>(s1)][static_cast<int>(s2)];
  }
  std::size_t at(Status s1, Status s2) const {
    return n[static_cast<int>(s1)][static_cast<int>(s2)];
  }
  std::size_t total() const;

  friend bool operator==(const StatusCounts&, const StatusCounts&) = default;
};

StatusCounts count_statuses(const TriSupport& a, const TriSupport& b);

struct JaccardVariants {
  double qnm = 0.0;   // UNKNOWN treated as not described
  double opt = 0.0;   // best case over every resolution of UNKNOWN
  double pess = 0.0;  // worst case over every resolution of UNKNOWN
};

// With I = n[in][in], D = n[in][out] + n[out][in],
// U = n[in][unk] + n[unk][in], B = n[unk][unk]:
//   qnm  = I / (I + D + U)
//   opt  = (I + U + B) / (I + U + B + D)
//   pess = I / |{e : not both statuses OUT}|
// Zero denominators give 0.
JaccardVariants jaccard_variants(const StatusCounts& c);

// P[X >= overlap] for X ~ Binomial(total, p1 * p2), summed in log space.
double binomial_pvalue(std::size_t overlap, std::size_t total, double p1,
                       double p2);

// p-value of a redescription from its status table; marginals are the
// TRUE-set sizes of each query.
double p_value(const StatusCounts& c, std::size_t total);

// Normalized selection scores, each in [0, 1].
double score_pvalue(double pv);
double score_size(std::size_t query_size, std::size_t normalizer = 20);
double score_element_occurrence(const ElementSet& support,
                                std::span<const std::uint32_t> element_counts,
                                std::uint64_t total);
double score_attribute_occurrence(std::span<const int> attributes,
                                  std::span<const std::uint32_t> attr_counts,
                                  std::uint64_t total);

// |a∩b| / |a∪b| over sorted distinct id lists; 0 when both are empty.
double jaccard_sorted(std::span<const int> a, std::span<const int> b);

struct RedescriptionStats {
  double j_qnm = 0.0;
  double j_opt = 0.0;
  double j_pess = 0.0;
  double p_value = 1.0;
  std::size_t support_size = 0;

  double variability() const { return j_opt - j_pess; }
  friend bool operator==(const RedescriptionStats&,
                         const RedescriptionStats&) = default;
};

// A query pair with its cached supports and statistics. The canonical
// support supp(R) is the intersection of the two TRUE sets.
class Redescription {
 public:
  Redescription() = default;

  // Evaluates both queries against the dataset.
  static Redescription evaluate(Query q1, Query q2, const Dataset& data);
  // Reuses already computed supports (must match the queries).
  static Redescription from_supports(Query q1, Query q2, TriSupport tri1,
                                     TriSupport tri2,
                                     std::size_t view1_attributes);

  const Query& q1() const { return q1_; }
  const Query& q2() const { return q2_; }
  const TriSupport& tri1() const { return tri1_; }
  const TriSupport& tri2() const { return tri2_; }
  const ElementSet& support() const { return support_; }
  const StatusCounts& counts() const { return counts_; }
  const RedescriptionStats& stats() const { return stats_; }

  double jaccard() const { return stats_.j_qnm; }
  double variability() const { return stats_.variability(); }
  // |attr(R)|: literal occurrences over both queries.
  std::size_t query_size() const { return query_size_; }
  // attrs(R) as global ids (view 2 offset by |V1|), sorted.
  const std::vector<int>& attributes() const { return attributes_; }

 private:
  Query q1_;
  Query q2_;
  TriSupport tri1_;
  TriSupport tri2_;
  ElementSet support_;
  StatusCounts counts_;
  RedescriptionStats stats_;
  std::size_t query_size_ = 0;
  std::vector<int> attributes_;
};

// Hard constraints on a redescription.
struct Constraints {
  double min_jaccard = 0.6;
  double min_ref_jaccard = 0.4;
  double max_pvalue = 0.01;
  std::size_t min_support = 10;
  std::size_t max_support = std::numeric_limits<std::size_t>::max();

  // Throws ConfigError when the bundle is inconsistent.
  void validate() const;
  bool accepts(const RedescriptionStats& s) const;
  bool accepts(const Redescription& r) const { return accepts(r.stats()); }
};

// Mean Jaccard of supp / attrs of pool[i] against every other member; 0 for
// a singleton pool.
double average_element_jaccard(std::size_t i,
                               std::span<const Redescription> pool);
double average_attribute_jaccard(std::size_t i,
                                 std::span<const Redescription> pool);

}  // namespace redesc
