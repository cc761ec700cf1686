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

#include "redesc/measures.hpp"

#include <algorithm>
#include <cmath>

#include "redesc/errors.hpp"
#include "redesc/kernels.hpp"

namespace redesc {

std::size_t StatusCounts::total() const {
  std::size_t s = 0;
  for (const auto& row : n) {
    for (std::size_t v : row) s += v;
  }
  return s;
}

StatusCounts count_statuses(const TriSupport& a, const TriSupport& b) {
  const std::size_t universe = a.in.universe();
  const auto& k = kernels::active();
  const std::size_t words = a.in.words().size();
  const kernels::CrossCounts cc =
      k.cross_counts(a.in.words().data(), a.unknown.words().data(),
                     b.in.words().data(), b.unknown.words().data(), words);
  const std::size_t in1 = k.popcount(a.in.words().data(), words);
  const std::size_t unk1 = k.popcount(a.unknown.words().data(), words);
  const std::size_t in2 = k.popcount(b.in.words().data(), words);
  const std::size_t unk2 = k.popcount(b.unknown.words().data(), words);

  StatusCounts c;
  c.at(Status::kIn, Status::kIn) = cc.tt;
  c.at(Status::kIn, Status::kUnknown) = cc.tu;
  c.at(Status::kUnknown, Status::kIn) = cc.ut;
  c.at(Status::kUnknown, Status::kUnknown) = cc.uu;
  c.at(Status::kIn, Status::kOut) = in1 - cc.tt - cc.tu;
  c.at(Status::kUnknown, Status::kOut) = unk1 - cc.ut - cc.uu;
  c.at(Status::kOut, Status::kIn) = in2 - cc.tt - cc.ut;
  c.at(Status::kOut, Status::kUnknown) = unk2 - cc.tu - cc.uu;
  c.at(Status::kOut, Status::kOut) =
      universe - in1 - unk1 - c.at(Status::kOut, Status::kIn) -
      c.at(Status::kOut, Status::kUnknown);
  return c;
}

namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0
                  : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

JaccardVariants jaccard_variants(const StatusCounts& c) {
  using S = Status;
  const std::size_t in = c.at(S::kIn, S::kIn);
  const std::size_t diff = c.at(S::kIn, S::kOut) + c.at(S::kOut, S::kIn);
  const std::size_t half_unknown =
      c.at(S::kIn, S::kUnknown) + c.at(S::kUnknown, S::kIn);
  const std::size_t both_unknown = c.at(S::kUnknown, S::kUnknown);
  const std::size_t unknown_out =
      c.at(S::kUnknown, S::kOut) + c.at(S::kOut, S::kUnknown);

  JaccardVariants v;
  v.qnm = ratio(in, in + diff + half_unknown);
  v.opt = ratio(in + half_unknown + both_unknown,
                in + half_unknown + both_unknown + diff);
  v.pess = ratio(in, in + diff + half_unknown + both_unknown + unknown_out);
  return v;
}

namespace {

double log_factorial(std::size_t n) {
  thread_local std::vector<double> cache{0.0};
  if (n >= cache.size()) {
    const std::size_t old = cache.size();
    cache.resize(n + 1);
    for (std::size_t i = old; i <= n; ++i) {
      int sign = 0;
      cache[i] = ::lgamma_r(static_cast<double>(i) + 1.0, &sign);
    }
  }
  return cache[n];
}

}  // namespace

double binomial_pvalue(std::size_t overlap, std::size_t total, double p1,
                       double p2) {
  if (overlap == 0) return 1.0;
  if (overlap > total) return 0.0;
  const double p = std::clamp(p1 * p2, 0.0, 1.0);
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;

  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const double log_n_fact = log_factorial(total);
  const auto log_term = [&](std::size_t k) {
    return log_n_fact - log_factorial(k) - log_factorial(total - k) +
           static_cast<double>(k) * log_p +
           static_cast<double>(total - k) * log_q;
  };

  // Terms are unimodal around the mean; the largest in the tail sits at
  // max(overlap, mode).
  const double mode = std::floor(static_cast<double>(total + 1) * p);
  const std::size_t peak =
      std::max<std::size_t>(overlap, static_cast<std::size_t>(mode));
  const double log_max = log_term(std::min(peak, total));

  double sum = 0.0;
  for (std::size_t k = overlap; k <= total; ++k) {
    const double term = std::exp(log_term(k) - log_max);
    sum += term;
    if (k > peak && term < 1e-18 * sum) break;
  }
  return std::clamp(std::exp(log_max + std::log(sum)), 0.0, 1.0);
}

double p_value(const StatusCounts& c, std::size_t total) {
  if (total == 0) return 1.0;
  using S = Status;
  const std::size_t in1 = c.at(S::kIn, S::kIn) + c.at(S::kIn, S::kOut) +
                          c.at(S::kIn, S::kUnknown);
  const std::size_t in2 = c.at(S::kIn, S::kIn) + c.at(S::kOut, S::kIn) +
                          c.at(S::kUnknown, S::kIn);
  const double n = static_cast<double>(total);
  return binomial_pvalue(c.at(S::kIn, S::kIn), total,
                         static_cast<double>(in1) / n,
                         static_cast<double>(in2) / n);
}

double score_pvalue(double pv) {
  if (!(pv >= 1e-17)) return 0.0;
  return std::clamp(std::log10(pv) / 17.0 + 1.0, 0.0, 1.0);
}

double score_size(std::size_t query_size, std::size_t normalizer) {
  if (normalizer == 0 || query_size >= normalizer) return 1.0;
  return static_cast<double>(query_size) / static_cast<double>(normalizer);
}

double score_element_occurrence(const ElementSet& support,
                                std::span<const std::uint32_t> element_counts,
                                std::uint64_t total) {
  if (total == 0) return 0.0;
  std::uint64_t sum = 0;
  support.for_each([&](std::size_t e) { sum += element_counts[e]; });
  return static_cast<double>(sum) / static_cast<double>(total);
}

double score_attribute_occurrence(std::span<const int> attributes,
                                  std::span<const std::uint32_t> attr_counts,
                                  std::uint64_t total) {
  if (total == 0) return 0.0;
  std::uint64_t sum = 0;
  for (int a : attributes) sum += attr_counts[static_cast<std::size_t>(a)];
  return static_cast<double>(sum) / static_cast<double>(total);
}

double jaccard_sorted(std::span<const int> a, std::span<const int> b) {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t inter = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++inter;
      ++i;
      ++j;
    }
  }
  return ratio(inter, a.size() + b.size() - inter);
}

Redescription Redescription::evaluate(Query q1, Query q2, const Dataset& data) {
  if (q1.view_id() != 1 || q2.view_id() != 2) {
    throw QueryError("redescription needs a view-1 and a view-2 query");
  }
  TriSupport t1 = tri_support(q1, data.view1);
  TriSupport t2 = tri_support(q2, data.view2);
  return from_supports(std::move(q1), std::move(q2), std::move(t1),
                       std::move(t2), data.view1.num_attributes());
}

Redescription Redescription::from_supports(Query q1, Query q2, TriSupport tri1,
                                           TriSupport tri2,
                                           std::size_t view1_attributes) {
  Redescription r;
  r.counts_ = count_statuses(tri1, tri2);
  r.support_ = tri1.in & tri2.in;
  const JaccardVariants jv = jaccard_variants(r.counts_);
  r.stats_.j_qnm = jv.qnm;
  r.stats_.j_opt = jv.opt;
  r.stats_.j_pess = jv.pess;
  r.stats_.p_value = p_value(r.counts_, tri1.in.universe());
  r.stats_.support_size = r.counts_.at(Status::kIn, Status::kIn);
  r.query_size_ = q1.literal_count() + q2.literal_count();
  r.attributes_ = q1.attribute_set();
  for (int a : q2.attribute_set()) {
    r.attributes_.push_back(static_cast<int>(view1_attributes) + a);
  }
  r.q1_ = std::move(q1);
  r.q2_ = std::move(q2);
  r.tri1_ = std::move(tri1);
  r.tri2_ = std::move(tri2);
  return r;
}

void Constraints::validate() const {
  const auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_unit(min_jaccard) || !in_unit(min_ref_jaccard) ||
      !in_unit(max_pvalue)) {
    throw ConfigError("Jaccard thresholds and max p-value must lie in [0, 1]");
  }
  if (min_ref_jaccard > min_jaccard) {
    throw ConfigError("min_ref_jaccard must not exceed min_jaccard");
  }
  if (min_support > max_support) {
    throw ConfigError("min_support exceeds max_support");
  }
}

bool Constraints::accepts(const RedescriptionStats& s) const {
  return s.j_qnm >= min_jaccard && s.p_value <= max_pvalue &&
         s.support_size >= min_support && s.support_size <= max_support;
}

double average_element_jaccard(std::size_t i,
                               std::span<const Redescription> pool) {
  if (pool.size() < 2) return 0.0;
  double sum = 0.0;
  for (std::size_t j = 0; j < pool.size(); ++j) {
    if (j != i) sum += jaccard(pool[i].support(), pool[j].support());
  }
  return sum / static_cast<double>(pool.size() - 1);
}

double average_attribute_jaccard(std::size_t i,
                                 std::span<const Redescription> pool) {
  if (pool.size() < 2) return 0.0;
  double sum = 0.0;
  for (std::size_t j = 0; j < pool.size(); ++j) {
    if (j != i) sum += jaccard_sorted(pool[i].attributes(), pool[j].attributes());
  }
  return sum / static_cast<double>(pool.size() - 1);
}

}  // namespace redesc
