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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "redesc/dataset.hpp"
#include "redesc/element_set.hpp"

namespace redesc {

// Strong Kleene truth values, ordered FALSE < UNKNOWN < TRUE so that AND is
// min and OR is max.
enum class Truth : std::uint8_t { kFalse = 0, kUnknown = 1, kTrue = 2 };

inline Truth kleene_and(Truth a, Truth b) { return a < b ? a : b; }
inline Truth kleene_or(Truth a, Truth b) { return a < b ? b : a; }
inline Truth kleene_not(Truth a) {
  return a == Truth::kUnknown ? a
         : a == Truth::kTrue  ? Truth::kFalse
                              : Truth::kTrue;
}

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool lo_open = false;
  bool hi_open = false;

  bool contains(double x) const {
    return (lo_open ? x > lo : x >= lo) && (hi_open ? x < hi : x <= hi);
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// One attribute test. Numeric attributes use `interval`, categorical ones
// `category`; a boolean literal tests the attribute for true.
struct Literal {
  int attribute = 0;
  AttributeKind kind = AttributeKind::kNumeric;
  Interval interval;
  int category = -1;
  bool negated = false;

  static Literal numeric(int attribute, Interval iv, bool negated = false);
  static Literal boolean(int attribute, bool negated = false);
  static Literal categorical(int attribute, int category, bool negated = false);

  // Truth on a single cell (NaN means missing).
  Truth eval(double cell) const;
  // The equivalent closed-range test on the stored cell encoding.
  Interval cell_range() const;

  friend bool operator==(const Literal&, const Literal&) = default;
};

enum class NodeOp : std::uint8_t { kLeaf, kAnd, kOr, kNot };

struct Node {
  NodeOp op = NodeOp::kLeaf;
  Literal literal;             // kLeaf
  std::vector<Node> children;  // kAnd / kOr (>= 2), kNot (exactly 1)

  static Node leaf(Literal l);
  static Node all_of(std::vector<Node> children);
  static Node any_of(std::vector<Node> children);
  static Node negation(Node child);

  friend bool operator==(const Node&, const Node&) = default;
};

// A formula over the attributes of one view (view_id 1 or 2).
class Query {
 public:
  Query() = default;
  Query(int view_id, Node root);

  static Query from_literals(int view_id, std::vector<Literal> literals);

  int view_id() const { return view_id_; }
  const Node& root() const { return root_; }

  // attr(q): one entry per literal occurrence, in tree order.
  std::vector<int> attribute_occurrences() const;
  // attrs(q): sorted distinct attribute ids.
  std::vector<int> attribute_set() const;
  std::size_t literal_count() const;
  // A single literal or an AND of literals.
  bool is_conjunctive() const;
  bool has_negation() const;
  bool has_disjunction() const;
  // Literals of a conjunctive query, in order; empty otherwise.
  std::vector<Literal> conjuncts() const;

  friend bool operator==(const Query&, const Query&) = default;

 private:
  int view_id_ = 1;
  Node root_;
};

// Structural hash, consistent with operator==.
std::size_t hash_query(const Query& q);

// Both sides are canonicalized; throws QueryError on view mismatch.
Query conjoin(const Query& a, const Query& b);
Query disjoin(const Query& a, const Query& b);

// Flattens nested AND/OR, folds NOT into single literals, removes double
// negation and duplicate children, and orders AND/OR children by
// (smallest attribute id, literal test). NOT over an AND/OR is kept as is.
// Truth-preserving on every row.
Query canonicalize(const Query& q);

struct TriSupport {
  ElementSet in;       // query TRUE
  ElementSet unknown;  // query UNKNOWN
  // FALSE is the complement of in ∪ unknown.

  ElementSet out() const;
  friend bool operator==(const TriSupport&, const TriSupport&) = default;
};

// Row-by-row interpreter. `row` holds one cell per attribute of the view.
// Throws QueryError when a literal references a missing attribute.
Truth eval_query(const Query& q, std::span<const double> row);

// Column-wise evaluation over every element of `view` using the kernel
// table. Agrees with eval_query on every row.
TriSupport tri_support(const Query& q, const View& view);

// Kleene connectives lifted to TriSupports.
TriSupport tri_and(const TriSupport& a, const TriSupport& b);
TriSupport tri_or(const TriSupport& a, const TriSupport& b);
TriSupport tri_not(const TriSupport& a);

// Grammar:
//   expr    := term ('|' term)*
//   term    := factor ('&' factor)*
//   factor  := '!' factor | '(' expr ')' | literal
//   literal := '[' NUM cmp NAME cmp NUM ']' | NAME | NAME '=' LABEL
//   cmp     := '<=' | '<'
// NAME and LABEL are identifiers ([A-Za-z_][A-Za-z0-9_.]*) or
// double-quoted strings with backslash escapes. NUM accepts inf/-inf.
// The result is canonicalized.
Query parse_query(std::string_view text, const View& view, int view_id);

// Canonical text; parse_query(print_query(q)) == canonicalize(q).
std::string print_query(const Query& q, const View& view);

// Replaces every interval with the closed hull of the observed values it
// accepts, so bounds become data values. Truth on every row is unchanged.
Query snap_intervals(const Query& q, const View& view);

// Intersects same-attribute, non-negated intervals that are siblings under
// one AND. Truth-preserving.
Query merge_intervals(const Query& q);

// Greedy support-preserving minimization: merge intervals, then repeatedly
// drop the first literal whose removal leaves both the TRUE and UNKNOWN
// sets unchanged, then merge again.
Query minimize_query(const Query& q, const View& view);

}  // namespace redesc
