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
#include <optional>
#include <vector>

#include "redesc/dataset.hpp"
#include "redesc/element_set.hpp"
#include "redesc/query.hpp"

namespace redesc {

// Row-major |E| x m matrix of 0/1 targets.
class TargetMatrix {
 public:
  TargetMatrix(std::size_t rows, std::size_t cols);

  // Column j is the indicator of columns[j].
  static TargetMatrix from_indicators(std::span<const ElementSet> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, bool v) {
    data_[r * cols_ + c] = v ? 1.0 : 0.0;
  }
  const double* row(std::size_t r) const { return data_.data() + r * cols_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

struct PctParams {
  int max_depth = 7;
  std::size_t min_leaf = 2;

  void validate() const;
};

// A test sending a row left when it holds: numeric `value <= threshold`,
// boolean `value is true`, categorical `value == category`. Missing values
// go right.
struct SplitTest {
  int attribute = 0;
  AttributeKind kind = AttributeKind::kNumeric;
  double threshold = 0.0;
  int category = -1;

  bool goes_left(double cell) const;
  // The literal describing the left (true) or right (false) branch.
  Literal branch_literal(bool left) const;
  friend bool operator==(const SplitTest&, const SplitTest&) = default;
};

struct Split {
  SplitTest test;
  // Summed per-target variance reduction.
  double gain = 0.0;
  ElementSet left;
  ElementSet right;
};

std::optional<Split> best_split(const ElementSet& cover, const View& view,
                                const TargetMatrix& targets,
                                std::size_t min_leaf);

struct TreeNode {
  ElementSet cover;
  int depth = 1;
  int parent = -1;
  bool is_left = false;
  std::optional<SplitTest> test;
  int left = -1;
  int right = -1;
};

// Nodes in depth-first order, root first.
struct Tree {
  std::vector<TreeNode> nodes;
};

Tree build_tree(const View& view, const TargetMatrix& targets,
                const PctParams& params);

struct Rule {
  Query query;
  ElementSet cover;
};

// One conjunctive query per non-root node: the conjunction of the branch
// tests from the root, minimized over `view`.
std::vector<Rule> extract_rules(const Tree& tree, const View& view,
                                int view_id);

}  // namespace redesc
