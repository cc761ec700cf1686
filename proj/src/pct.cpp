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

#include "redesc/pct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "redesc/errors.hpp"
#include "redesc/kernels.hpp"

namespace redesc {

TargetMatrix::TargetMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
  if (cols == 0) throw Error("target matrix needs at least one column");
}

TargetMatrix TargetMatrix::from_indicators(std::span<const ElementSet> columns) {
  if (columns.empty()) throw Error("target matrix needs at least one column");
  TargetMatrix t(columns.front().universe(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    columns[c].for_each([&](std::size_t r) { t.set(r, c, true); });
  }
  return t;
}

void PctParams::validate() const {
  if (max_depth < 1) throw ConfigError("max_depth must be at least 1");
  if (min_leaf < 1) throw ConfigError("min_leaf must be at least 1");
}

bool SplitTest::goes_left(double cell) const {
  if (is_missing(cell)) return false;
  switch (kind) {
    case AttributeKind::kNumeric:
      return cell <= threshold;
    case AttributeKind::kBoolean:
      return cell == 1.0;
    case AttributeKind::kCategorical:
      return cell == static_cast<double>(category);
  }
  return false;
}

Literal SplitTest::branch_literal(bool left) const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (kind) {
    case AttributeKind::kNumeric:
      return left ? Literal::numeric(attribute, Interval{-inf, threshold})
                  : Literal::numeric(attribute,
                                     Interval{threshold, inf, true, false});
    case AttributeKind::kBoolean:
      return Literal::boolean(attribute, !left);
    case AttributeKind::kCategorical:
      return Literal::categorical(attribute, category, !left);
  }
  return Literal{};
}

namespace {

using i128 = __int128;

// Candidate quality is A/nL + B/nR with A = sum_j L_j^2, B = sum_j R_j^2
// (L_j, R_j per-target child sums); larger is better. All quantities are
// integers, so comparisons are exact.
struct Candidate {
  i128 a = 0;
  i128 b = 0;
  i128 nl = 0;
  i128 nr = 0;

  bool better_than(const Candidate& o) const {
    return (a * nr + b * nl) * o.nl * o.nr > (o.a * o.nr + o.b * o.nl) * nl * nr;
  }
};

class SplitSearch {
 public:
  SplitSearch(const TargetMatrix& targets, const ElementSet& cover,
              std::size_t min_leaf)
      : targets_(targets),
        m_(targets.cols()),
        n_(cover.count()),
        min_leaf_(min_leaf),
        total_(m_, 0.0),
        acc_(m_, 0.0),
        kern_(kernels::active()) {
    cover.for_each([&](std::size_t r) { kern_.accumulate(total_.data(), targets_.row(r), m_); });
    for (double t : total_) total_sq_ += static_cast<i128>(t) * static_cast<i128>(t);
  }

  void reset() { std::fill(acc_.begin(), acc_.end(), 0.0); }
  void add(std::size_t row) { kern_.accumulate(acc_.data(), targets_.row(row), m_); }

  // Offers the split whose left child is the accumulated rows.
  void offer(std::size_t n_left, const SplitTest& test) {
    const std::size_t n_right = n_ - n_left;
    if (n_left < min_leaf_ || n_right < min_leaf_) return;
    const kernels::SplitSums s = kern_.split_sums(acc_.data(), total_.data(), m_);
    Candidate c{static_cast<i128>(s.left_sq), static_cast<i128>(s.right_sq),
                static_cast<i128>(n_left), static_cast<i128>(n_right)};
    // h > 0  <=>  (A*nR + B*nL) * N > T * nL * nR
    if ((c.a * c.nr + c.b * c.nl) * static_cast<i128>(n_) <=
        total_sq_ * c.nl * c.nr) {
      return;
    }
    if (!best_ || c.better_than(best_cand_)) {
      best_cand_ = c;
      best_ = test;
    }
  }

  const std::optional<SplitTest>& best() const { return best_; }

  double gain() const {
    const auto& c = best_cand_;
    const double n = static_cast<double>(n_);
    return (static_cast<double>(c.a) / static_cast<double>(c.nl) +
            static_cast<double>(c.b) / static_cast<double>(c.nr) -
            static_cast<double>(total_sq_) / n) /
           n;
  }

 private:
  const TargetMatrix& targets_;
  std::size_t m_;
  std::size_t n_;
  std::size_t min_leaf_;
  std::vector<double> total_;
  std::vector<double> acc_;
  i128 total_sq_ = 0;
  const kernels::KernelTable& kern_;
  std::optional<SplitTest> best_;
  Candidate best_cand_;
};

double midpoint(double lo, double hi) {
  double t = lo + (hi - lo) / 2.0;
  if (!(t >= lo && t < hi)) t = lo;
  return t;
}

void scan_numeric(SplitSearch& search, const ElementSet& cover,
                  std::span<const double> column, int attribute) {
  std::vector<std::pair<double, std::size_t>> values;
  cover.for_each([&](std::size_t r) {
    if (!is_missing(column[r])) values.emplace_back(column[r], r);
  });
  std::sort(values.begin(), values.end());
  search.reset();
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    search.add(values[i].second);
    if (values[i + 1].first > values[i].first) {
      SplitTest t{attribute, AttributeKind::kNumeric,
                  midpoint(values[i].first, values[i + 1].first), -1};
      search.offer(i + 1, t);
    }
  }
}

void scan_boolean(SplitSearch& search, const ElementSet& cover,
                  std::span<const double> column, int attribute) {
  search.reset();
  std::size_t n_left = 0;
  cover.for_each([&](std::size_t r) {
    if (column[r] == 1.0) {
      search.add(r);
      ++n_left;
    }
  });
  search.offer(n_left, SplitTest{attribute, AttributeKind::kBoolean, 0.0, -1});
}

void scan_categorical(SplitSearch& search, const ElementSet& cover,
                      std::span<const double> column, int attribute,
                      std::size_t categories) {
  std::vector<std::vector<std::size_t>> buckets(categories);
  cover.for_each([&](std::size_t r) {
    if (!is_missing(column[r])) {
      buckets[static_cast<std::size_t>(column[r])].push_back(r);
    }
  });
  for (std::size_t c = 0; c < categories; ++c) {
    search.reset();
    for (std::size_t r : buckets[c]) search.add(r);
    search.offer(buckets[c].size(), SplitTest{attribute, AttributeKind::kCategorical,
                                              0.0, static_cast<int>(c)});
  }
}

}  // namespace

std::optional<Split> best_split(const ElementSet& cover, const View& view,
                                const TargetMatrix& targets,
                                std::size_t min_leaf) {
  if (targets.rows() != view.num_rows() || cover.universe() != view.num_rows()) {
    throw Error("target matrix and view disagree on the number of rows");
  }
  min_leaf = std::max<std::size_t>(min_leaf, 1);
  if (cover.count() < 2 * min_leaf) return std::nullopt;

  SplitSearch search(targets, cover, min_leaf);
  for (std::size_t a = 0; a < view.num_attributes(); ++a) {
    const Attribute& attr = view.attribute(a);
    const int id = static_cast<int>(a);
    switch (attr.kind) {
      case AttributeKind::kNumeric:
        scan_numeric(search, cover, view.column(a), id);
        break;
      case AttributeKind::kBoolean:
        scan_boolean(search, cover, view.column(a), id);
        break;
      case AttributeKind::kCategorical:
        scan_categorical(search, cover, view.column(a), id,
                         attr.categories.size());
        break;
    }
  }
  if (!search.best()) return std::nullopt;

  Split s;
  s.test = *search.best();
  s.gain = search.gain();
  s.left = ElementSet(cover.universe());
  s.right = ElementSet(cover.universe());
  const auto column = view.column(static_cast<std::size_t>(s.test.attribute));
  cover.for_each([&](std::size_t r) {
    if (s.test.goes_left(column[r])) {
      s.left.set(r);
    } else {
      s.right.set(r);
    }
  });
  return s;
}

namespace {

void grow(Tree& tree, int index, const View& view, const TargetMatrix& targets,
          const PctParams& params) {
  if (tree.nodes[index].depth >= params.max_depth) return;
  auto split = best_split(tree.nodes[index].cover, view, targets, params.min_leaf);
  if (!split) return;
  const int depth = tree.nodes[index].depth + 1;
  tree.nodes[index].test = split->test;

  const int left = static_cast<int>(tree.nodes.size());
  tree.nodes.push_back(TreeNode{std::move(split->left), depth, index, true, {}, -1, -1});
  tree.nodes[index].left = left;
  grow(tree, left, view, targets, params);

  const int right = static_cast<int>(tree.nodes.size());
  tree.nodes.push_back(TreeNode{std::move(split->right), depth, index, false, {}, -1, -1});
  tree.nodes[index].right = right;
  grow(tree, right, view, targets, params);
}

}  // namespace

Tree build_tree(const View& view, const TargetMatrix& targets,
                const PctParams& params) {
  params.validate();
  if (targets.rows() != view.num_rows()) {
    throw Error("target matrix and view disagree on the number of rows");
  }
  Tree tree;
  tree.nodes.push_back(TreeNode{ElementSet::full(view.num_rows()), 1, -1, false, {}, -1, -1});
  grow(tree, 0, view, targets, params);
  return tree;
}

std::vector<Rule> extract_rules(const Tree& tree, const View& view,
                                int view_id) {
  std::vector<Rule> rules;
  for (std::size_t i = 1; i < tree.nodes.size(); ++i) {
    std::vector<Literal> path;
    for (int n = static_cast<int>(i); tree.nodes[n].parent >= 0;
         n = tree.nodes[n].parent) {
      const TreeNode& node = tree.nodes[n];
      path.push_back(tree.nodes[node.parent].test->branch_literal(node.is_left));
    }
    std::reverse(path.begin(), path.end());
    Query q = minimize_query(Query::from_literals(view_id, std::move(path)), view);
    rules.push_back(Rule{std::move(q), tree.nodes[i].cover});
  }
  return rules;
}

}  // namespace redesc
