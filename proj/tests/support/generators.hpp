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

// Random data, query and redescription generators shared by the tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "redesc/dataset.hpp"
#include "redesc/measures.hpp"
#include "redesc/query.hpp"

namespace redesc::testing {

using Rng = std::mt19937_64;

struct ViewShape {
  std::size_t numeric = 3;
  std::size_t boolean = 2;
  std::size_t categorical = 1;
  std::size_t categories = 3;
  double missing_rate = 0.0;
  // Numeric cells are drawn from a small grid so ties occur.
  int grid = 10;
  std::string prefix = "a";
};

inline View random_view(Rng& rng, std::size_t rows, const ViewShape& shape) {
  std::vector<Attribute> attrs;
  std::vector<std::vector<double>> cols;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto maybe_missing = [&](double v) {
    return unit(rng) < shape.missing_rate ? kMissing : v;
  };
  int id = 0;
  for (std::size_t i = 0; i < shape.numeric; ++i, ++id) {
    attrs.push_back({id, shape.prefix + "n" + std::to_string(i), AttributeKind::kNumeric, {}});
    std::vector<double> c(rows);
    std::uniform_int_distribution<int> g(0, shape.grid - 1);
    for (double& v : c) v = maybe_missing(static_cast<double>(g(rng)) / 2.0);
    cols.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < shape.boolean; ++i, ++id) {
    attrs.push_back({id, shape.prefix + "b" + std::to_string(i), AttributeKind::kBoolean, {}});
    std::vector<double> c(rows);
    for (double& v : c) v = maybe_missing(unit(rng) < 0.5 ? 1.0 : 0.0);
    cols.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < shape.categorical; ++i, ++id) {
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < shape.categories; ++k) {
      labels.push_back("c" + std::to_string(k));
    }
    attrs.push_back({id, shape.prefix + "c" + std::to_string(i),
                     AttributeKind::kCategorical, labels});
    std::vector<double> c(rows);
    std::uniform_int_distribution<std::size_t> g(0, shape.categories - 1);
    for (double& v : c) v = maybe_missing(static_cast<double>(g(rng)));
    cols.push_back(std::move(c));
  }
  return View(std::move(attrs), std::move(cols));
}

inline Dataset random_dataset(Rng& rng, std::size_t rows, double missing_rate = 0.0) {
  ViewShape s1;
  s1.missing_rate = missing_rate;
  s1.prefix = "x";
  ViewShape s2;
  s2.missing_rate = missing_rate;
  s2.prefix = "y";
  s2.numeric = 2;
  s2.boolean = 3;
  View v1 = random_view(rng, rows, s1);
  View v2 = random_view(rng, rows, s2);
  return Dataset(std::move(v1), std::move(v2));
}

// A literal on attribute `a` that holds for a random part of its values.
inline Literal random_literal(Rng& rng, const View& view, int a, bool allow_negation) {
  const Attribute& attr = view.attribute(static_cast<std::size_t>(a));
  std::bernoulli_distribution coin(0.5);
  const bool neg = allow_negation && std::bernoulli_distribution(0.25)(rng);
  switch (attr.kind) {
    case AttributeKind::kNumeric: {
      std::vector<double> vals;
      for (double v : view.column(static_cast<std::size_t>(a))) {
        if (!is_missing(v)) vals.push_back(v);
      }
      if (vals.empty()) vals.push_back(0.0);
      std::uniform_int_distribution<std::size_t> pick(0, vals.size() - 1);
      double lo = vals[pick(rng)];
      double hi = vals[pick(rng)];
      if (lo > hi) std::swap(lo, hi);
      Interval iv{lo, hi, false, false};
      if (coin(rng)) iv.lo = -std::numeric_limits<double>::infinity();
      else if (coin(rng)) iv.hi = std::numeric_limits<double>::infinity();
      if (std::bernoulli_distribution(0.2)(rng) && iv.lo < iv.hi) iv.lo_open = true;
      return Literal::numeric(a, iv, neg);
    }
    case AttributeKind::kBoolean:
      return Literal::boolean(a, neg);
    case AttributeKind::kCategorical: {
      std::uniform_int_distribution<int> pick(
          0, static_cast<int>(attr.categories.size()) - 1);
      return Literal::categorical(a, pick(rng), neg);
    }
  }
  return Literal{};
}

inline Query random_conjunctive(Rng& rng, const View& view, int view_id,
                                std::size_t max_literals, bool allow_negation = false) {
  std::uniform_int_distribution<std::size_t> count(1, max_literals);
  std::uniform_int_distribution<int> attr(0, static_cast<int>(view.num_attributes()) - 1);
  std::vector<Literal> lits;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    lits.push_back(random_literal(rng, view, attr(rng), allow_negation));
  }
  return Query::from_literals(view_id, std::move(lits));
}

inline Node random_node(Rng& rng, const View& view, int depth) {
  std::uniform_int_distribution<int> attr(0, static_cast<int>(view.num_attributes()) - 1);
  std::uniform_int_distribution<int> op(0, 3);
  const int choice = depth <= 0 ? 0 : op(rng);
  if (choice == 0) return Node::leaf(random_literal(rng, view, attr(rng), true));
  if (choice == 3) return Node::negation(random_node(rng, view, depth - 1));
  std::uniform_int_distribution<int> width(2, 3);
  std::vector<Node> kids;
  const int w = width(rng);
  for (int i = 0; i < w; ++i) kids.push_back(random_node(rng, view, depth - 1));
  return choice == 1 ? Node::all_of(std::move(kids)) : Node::any_of(std::move(kids));
}

// Arbitrary AND/OR/NOT formula, not canonicalized.
inline Query random_query(Rng& rng, const View& view, int view_id, int depth = 3) {
  return Query(view_id, random_node(rng, view, depth));
}

// Random conjunctive redescriptions, without dedup or constraints.
inline std::vector<Redescription> random_pool(Rng& rng, const Dataset& data,
                                              std::size_t count,
                                              std::size_t max_literals = 3) {
  std::vector<Redescription> pool;
  pool.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Query q1 = random_conjunctive(rng, data.view1, 1, max_literals);
    Query q2 = random_conjunctive(rng, data.view2, 2, max_literals);
    pool.push_back(Redescription::evaluate(std::move(q1), std::move(q2), data));
  }
  return pool;
}

struct PlantedData {
  Dataset data;
  ElementSet planted;
};

// 200 x (8 numeric + 8 boolean) two-view data. The planted set holds 40
// elements with x0, x1 in [0.6, 0.9] and b0 = b1 = true; no other element
// satisfies either description. Every other cell is uniform noise.
inline PlantedData planted_dataset(std::uint64_t seed, std::size_t rows = 200,
                                   std::size_t planted = 40) {
  Rng rng(seed);
  std::vector<std::size_t> idx(rows);
  for (std::size_t i = 0; i < rows; ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  ElementSet s(rows);
  for (std::size_t i = 0; i < planted; ++i) s.set(idx[i]);

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> box(0.6, 0.9);
  std::bernoulli_distribution coin(0.5);
  const auto in_box = [](double a, double b) {
    return a >= 0.6 && a <= 0.9 && b >= 0.6 && b <= 0.9;
  };

  std::vector<Attribute> a1;
  std::vector<Attribute> a2;
  std::vector<std::vector<double>> c1(8, std::vector<double>(rows));
  std::vector<std::vector<double>> c2(8, std::vector<double>(rows));
  for (int j = 0; j < 8; ++j) {
    a1.push_back({j, "x" + std::to_string(j), AttributeKind::kNumeric, {}});
    a2.push_back({j, "b" + std::to_string(j), AttributeKind::kBoolean, {}});
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (int j = 0; j < 8; ++j) {
      c1[j][r] = unit(rng);
      c2[j][r] = coin(rng) ? 1.0 : 0.0;
    }
    if (s.test(r)) {
      c1[0][r] = box(rng);
      c1[1][r] = box(rng);
      c2[0][r] = 1.0;
      c2[1][r] = 1.0;
    } else {
      while (in_box(c1[0][r], c1[1][r])) {
        c1[0][r] = unit(rng);
        c1[1][r] = unit(rng);
      }
      while (c2[0][r] == 1.0 && c2[1][r] == 1.0) {
        c2[0][r] = coin(rng) ? 1.0 : 0.0;
        c2[1][r] = coin(rng) ? 1.0 : 0.0;
      }
    }
  }
  return {Dataset(View(std::move(a1), std::move(c1)), View(std::move(a2), std::move(c2))),
          std::move(s)};
}

}  // namespace redesc::testing
