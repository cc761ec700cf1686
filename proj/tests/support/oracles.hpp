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

// Independent reference computations shared by the unit and acceptance
// tests. Each is written from the definitions with plain containers and
// never calls the library routine it checks.

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include <boost/math/special_functions/binomial.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "redesc/grsc.hpp"
#include "redesc/measures.hpp"
#include "redesc/refine.hpp"
#include "support/generators.hpp"

namespace redesc::testing {

// ---- Jaccard variants ---------------------------------------------------

// Per-element status pair, 0 in / 1 out / 2 unknown.
using StatusPairs = std::vector<std::pair<int, int>>;

struct SupportPair {
  TriSupport a;
  TriSupport b;
};

inline SupportPair to_supports(const StatusPairs& p) {
  const std::size_t n = p.size();
  SupportPair t{{ElementSet(n), ElementSet(n)}, {ElementSet(n), ElementSet(n)}};
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i].first == 0) t.a.in.set(i);
    if (p[i].first == 2) t.a.unknown.set(i);
    if (p[i].second == 0) t.b.in.set(i);
    if (p[i].second == 2) t.b.unknown.set(i);
  }
  return t;
}

inline StatusPairs random_status_pairs(Rng& rng, std::size_t n, double unk_rate) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  StatusPairs p(n);
  for (auto& [x, y] : p) {
    x = u(rng) < unk_rate ? 2 : static_cast<int>(rng() % 2);
    y = u(rng) < unk_rate ? 2 : static_cast<int>(rng() % 2);
  }
  return p;
}

inline std::size_t unknown_cells(const StatusPairs& p) {
  std::size_t n = 0;
  for (auto [x, y] : p) n += (x == 2) + (y == 2);
  return n;
}

inline double classic_jaccard(const StatusPairs& p) {
  std::size_t inter = 0;
  std::size_t uni = 0;
  for (auto [x, y] : p) {
    inter += x == 0 && y == 0;
    uni += x == 0 || y == 0;
  }
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

// (max, min) of J over every resolution of each UNKNOWN cell to in/out.
inline std::pair<double, double> completion_extremes(const StatusPairs& p) {
  std::vector<std::pair<std::size_t, int>> unk;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].first == 2) unk.push_back({i, 0});
    if (p[i].second == 2) unk.push_back({i, 1});
  }
  double best = -1.0;
  double worst = 2.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << unk.size()); ++mask) {
    StatusPairs q = p;
    for (std::size_t k = 0; k < unk.size(); ++k) {
      const int v = (mask >> k) & 1u ? 0 : 1;
      if (unk[k].second == 0) {
        q[unk[k].first].first = v;
      } else {
        q[unk[k].first].second = v;
      }
    }
    const double j = classic_jaccard(q);
    best = std::max(best, j);
    worst = std::min(worst, j);
  }
  return {best, worst};
}

// ---- p-value --------------------------------------------------------------

using BigFloat = boost::multiprecision::cpp_bin_float_50;

// Direct summation of the binomial upper tail in 50-digit arithmetic.
inline double naive_binomial_tail(std::size_t o, std::size_t n, double p1, double p2) {
  const BigFloat p = BigFloat(p1) * BigFloat(p2);
  BigFloat sum = 0;
  for (std::size_t k = o; k <= n; ++k) {
    const BigFloat c = boost::math::binomial_coefficient<BigFloat>(
        static_cast<unsigned>(n), static_cast<unsigned>(k));
    sum += c * boost::multiprecision::pow(p, static_cast<int>(k)) *
           boost::multiprecision::pow(1 - p, static_cast<int>(n - k));
  }
  return static_cast<double>(sum);
}

// ---- Refinement -----------------------------------------------------------

struct RefinementCase {
  Redescription r;
  Redescription ref;
};

// Draws (r, ref) pairs with supp(r) ⊆ supp(ref). Half of them build r by
// strengthening ref, the rest are independent draws that happen to nest.
inline std::vector<RefinementCase> nested_pairs(Rng& rng, const Dataset& d,
                                                std::size_t count) {
  std::vector<RefinementCase> out;
  std::size_t attempts = 0;
  while (out.size() < count && attempts < count * 200) {
    ++attempts;
    const Query ref1 = random_conjunctive(rng, d.view1, 1, 2);
    const Query ref2 = random_conjunctive(rng, d.view2, 2, 2);
    Query r1 = random_conjunctive(rng, d.view1, 1, 3);
    Query r2 = random_conjunctive(rng, d.view2, 2, 3);
    if (attempts % 2 == 0) {
      r1 = conjoin(ref1, r1);
      r2 = conjoin(ref2, r2);
    }
    Redescription ref = Redescription::evaluate(ref1, ref2, d);
    Redescription r = Redescription::evaluate(r1, r2, d);
    if (r.support().empty() && attempts % 3 != 0) continue;
    if (!r.support().is_subset_of(ref.support())) continue;
    out.push_back({std::move(r), std::move(ref)});
  }
  return out;
}

// Some element of a TRUE set of r lies outside the matching TRUE set of the
// ref tightened to supp(r).
inline bool has_witness(const Redescription& r, const Redescription& ref, const Dataset& d) {
  const auto tight = tighten_bounds(ref, r.support(), d);
  if (!tight) return false;
  ElementSet out1 = r.tri1().in;
  out1.subtract(tight->tri1().in);
  ElementSet out2 = r.tri2().in;
  out2.subtract(tight->tri2().in);
  return !out1.empty() || !out2.empty();
}

// ---- Set construction -----------------------------------------------------

// Brute-force rescoring from the selection formulas.
struct SelectionOracle {
  std::span<const Redescription> pool;
  std::size_t num_elements;
  std::size_t v1;
  std::vector<double> elem_occ;
  std::vector<double> attr_occ;
  double elem_total = 0;
  double attr_total = 0;

  SelectionOracle(std::span<const Redescription> p, const Dataset& d)
      : pool(p),
        num_elements(d.num_elements()),
        v1(d.view1.num_attributes()),
        elem_occ(d.num_elements(), 0.0),
        attr_occ(d.num_attributes(), 0.0) {
    for (const Redescription& r : pool) {
      for (std::size_t e : r.support().indices()) {
        elem_occ[e] += 1;
        elem_total += 1;
      }
      for (int a : attrs(r)) {
        attr_occ[static_cast<std::size_t>(a)] += 1;
        attr_total += 1;
      }
    }
  }

  static double pval_score(double pv) {
    if (pv < 1e-17) return 0.0;
    return std::min(1.0, std::max(0.0, std::log10(pv) / 17.0 + 1.0));
  }
  static double size_score(const Redescription& r) {
    const double size = static_cast<double>(r.q1().literal_count() + r.q2().literal_count());
    return std::min(1.0, size / 20.0);
  }
  std::set<int> attrs(const Redescription& r) const {
    std::set<int> s;
    for (int a : r.q1().attribute_set()) s.insert(a);
    for (int a : r.q2().attribute_set()) s.insert(a + static_cast<int>(v1));
    return s;
  }
  static double set_jaccard(const std::set<int>& a, const std::set<int>& b) {
    std::size_t inter = 0;
    for (int x : a) inter += b.count(x);
    const std::size_t uni = a.size() + b.size() - inter;
    return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
  }
  static double support_jaccard(const Redescription& a, const Redescription& b) {
    const auto x = a.support().indices();
    const auto y = b.support().indices();
    const std::set<std::size_t> sx(x.begin(), x.end());
    std::size_t inter = 0;
    for (auto e : y) inter += sx.count(e);
    const std::size_t uni = x.size() + y.size() - inter;
    return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
  }

  double first_score(const Redescription& r, const WeightVector& w) const {
    double oe = 0;
    for (std::size_t e : r.support().indices()) oe += elem_occ[e];
    double oa = 0;
    for (int a : attrs(r)) oa += attr_occ[static_cast<std::size_t>(a)];
    const double var = r.stats().j_opt - r.stats().j_pess;
    return w.j * (1.0 - r.stats().j_qnm) + w.pv * pval_score(r.stats().p_value) +
           w.ej * (elem_total > 0 ? oe / elem_total : 0.0) +
           w.aj * (attr_total > 0 ? oa / attr_total : 0.0) + w.rqs * size_score(r) +
           w.rv * var;
  }

  double next_score(const Redescription& r, const std::vector<std::size_t>& chosen,
                    const WeightVector& w, std::size_t n) const {
    double es = 0;
    double as = 0;
    for (std::size_t c : chosen) {
      es = std::max(es, support_jaccard(r, pool[c]));
      as = std::max(as, set_jaccard(attrs(r), attrs(pool[c])));
    }
    const double k = static_cast<double>(chosen.size());
    const double frac =
        static_cast<double>(r.support().count()) / static_cast<double>(num_elements);
    const double var = r.stats().j_opt - r.stats().j_pess;
    return w.j * (1.0 - r.stats().j_qnm) +
           w.pv * (k / n * pval_score(r.stats().p_value) + (1.0 - k / n) * frac) +
           w.ej * es + w.aj * as + w.rqs * size_score(r) + w.rv * var;
  }
};

// Replays a reduction and checks each pick against the oracle. A pick must
// reach the oracle minimum within `tol`, and no earlier candidate may score
// lower by more than `tol`. Returns the first failing step or -1.
inline int first_suboptimal_step(std::span<const Redescription> pool, const Dataset& d,
                                 const WeightVector& w, std::size_t n,
                                 const std::vector<std::size_t>& picks,
                                 double tol = 1e-12) {
  const SelectionOracle o(pool, d);
  std::vector<std::size_t> chosen;
  std::vector<bool> taken(pool.size(), false);
  for (std::size_t step = 0; step < picks.size(); ++step) {
    std::vector<double> scores(pool.size(), std::numeric_limits<double>::infinity());
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (taken[i]) continue;
      scores[i] = step == 0 ? o.first_score(pool[i], w) : o.next_score(pool[i], chosen, w, n);
      lo = std::min(lo, scores[i]);
    }
    const std::size_t pick = picks[step];
    if (pick >= pool.size() || taken[pick]) return static_cast<int>(step);
    if (scores[pick] > lo + tol) return static_cast<int>(step);
    for (std::size_t i = 0; i < pick; ++i) {
      if (!taken[i] && scores[i] < scores[pick] - tol) return static_cast<int>(step);
    }
    taken[pick] = true;
    chosen.push_back(pick);
  }
  return -1;
}

}  // namespace redesc::testing
