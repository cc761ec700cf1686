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

#include "redesc/query.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <optional>

#include "redesc/errors.hpp"
#include "redesc/kernels.hpp"
#include "redesc/text.hpp"

namespace redesc {

// ---------------------------------------------------------------------------
// Literals and nodes

Literal Literal::numeric(int attribute, Interval iv, bool negated) {
  Literal l;
  l.attribute = attribute;
  l.kind = AttributeKind::kNumeric;
  l.interval = iv;
  l.negated = negated;
  return l;
}

Literal Literal::boolean(int attribute, bool negated) {
  Literal l;
  l.attribute = attribute;
  l.kind = AttributeKind::kBoolean;
  l.negated = negated;
  return l;
}

Literal Literal::categorical(int attribute, int category, bool negated) {
  Literal l;
  l.attribute = attribute;
  l.kind = AttributeKind::kCategorical;
  l.category = category;
  l.negated = negated;
  return l;
}

Interval Literal::cell_range() const {
  switch (kind) {
    case AttributeKind::kNumeric:
      return interval;
    case AttributeKind::kBoolean:
      return Interval{1.0, 1.0, false, false};
    case AttributeKind::kCategorical:
      return Interval{static_cast<double>(category),
                      static_cast<double>(category), false, false};
  }
  return interval;
}

Truth Literal::eval(double cell) const {
  if (is_missing(cell)) return Truth::kUnknown;
  const bool hit = cell_range().contains(cell);
  return hit != negated ? Truth::kTrue : Truth::kFalse;
}

Node Node::leaf(Literal l) {
  Node n;
  n.op = NodeOp::kLeaf;
  n.literal = l;
  return n;
}

Node Node::all_of(std::vector<Node> children) {
  Node n;
  n.op = NodeOp::kAnd;
  n.children = std::move(children);
  return n;
}

Node Node::any_of(std::vector<Node> children) {
  Node n;
  n.op = NodeOp::kOr;
  n.children = std::move(children);
  return n;
}

Node Node::negation(Node child) {
  Node n;
  n.op = NodeOp::kNot;
  n.children.push_back(std::move(child));
  return n;
}

// ---------------------------------------------------------------------------
// Query

Query::Query(int view_id, Node root) : view_id_(view_id), root_(std::move(root)) {
  if (view_id != 1 && view_id != 2) {
    throw QueryError("view id must be 1 or 2");
  }
}

Query Query::from_literals(int view_id, std::vector<Literal> literals) {
  if (literals.empty()) throw QueryError("query needs at least one literal");
  if (literals.size() == 1) return Query(view_id, Node::leaf(literals[0]));
  std::vector<Node> kids;
  for (const auto& l : literals) kids.push_back(Node::leaf(l));
  return canonicalize(Query(view_id, Node::all_of(std::move(kids))));
}

namespace {

template <typename Fn>
void visit_leaves(const Node& n, Fn&& fn) {
  if (n.op == NodeOp::kLeaf) {
    fn(n.literal);
    return;
  }
  for (const auto& c : n.children) visit_leaves(c, fn);
}

bool contains_op(const Node& n, NodeOp op) {
  if (n.op == op) return true;
  return std::any_of(n.children.begin(), n.children.end(),
                     [&](const Node& c) { return contains_op(c, op); });
}

}  // namespace

std::vector<int> Query::attribute_occurrences() const {
  std::vector<int> out;
  visit_leaves(root_, [&](const Literal& l) { out.push_back(l.attribute); });
  return out;
}

std::vector<int> Query::attribute_set() const {
  auto out = attribute_occurrences();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t Query::literal_count() const {
  std::size_t n = 0;
  visit_leaves(root_, [&](const Literal&) { ++n; });
  return n;
}

bool Query::is_conjunctive() const {
  if (root_.op == NodeOp::kLeaf) return true;
  if (root_.op != NodeOp::kAnd) return false;
  return std::all_of(root_.children.begin(), root_.children.end(),
                     [](const Node& c) { return c.op == NodeOp::kLeaf; });
}

bool Query::has_negation() const {
  bool neg = contains_op(root_, NodeOp::kNot);
  visit_leaves(root_, [&](const Literal& l) { neg = neg || l.negated; });
  return neg;
}

bool Query::has_disjunction() const { return contains_op(root_, NodeOp::kOr); }

std::vector<Literal> Query::conjuncts() const {
  std::vector<Literal> out;
  if (!is_conjunctive()) return out;
  visit_leaves(root_, [&](const Literal& l) { out.push_back(l); });
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

int min_attribute(const Node& n) {
  if (n.op == NodeOp::kLeaf) return n.literal.attribute;
  int m = std::numeric_limits<int>::max();
  for (const auto& c : n.children) m = std::min(m, min_attribute(c));
  return m;
}

template <typename T>
int cmp3(const T& a, const T& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

int compare_literal(const Literal& a, const Literal& b) {
  if (int c = cmp3(a.attribute, b.attribute)) return c;
  if (int c = cmp3(static_cast<int>(a.kind), static_cast<int>(b.kind))) return c;
  if (int c = cmp3(a.interval.lo, b.interval.lo)) return c;
  if (int c = cmp3(a.interval.lo_open, b.interval.lo_open)) return c;
  if (int c = cmp3(a.interval.hi, b.interval.hi)) return c;
  if (int c = cmp3(a.interval.hi_open, b.interval.hi_open)) return c;
  if (int c = cmp3(a.category, b.category)) return c;
  return cmp3(a.negated, b.negated);
}

int compare_node(const Node& a, const Node& b) {
  if (int c = cmp3(min_attribute(a), min_attribute(b))) return c;
  if (int c = cmp3(static_cast<int>(a.op), static_cast<int>(b.op))) return c;
  if (a.op == NodeOp::kLeaf) return compare_literal(a.literal, b.literal);
  const std::size_t n = std::min(a.children.size(), b.children.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare_node(a.children[i], b.children[i])) return c;
  }
  return cmp3(a.children.size(), b.children.size());
}

Node canon(const Node& n, bool negate);

Node canon_compound(const Node& n) {
  std::vector<Node> kids;
  for (const auto& c : n.children) {
    Node cc = canon(c, false);
    if (cc.op == n.op) {
      for (auto& g : cc.children) kids.push_back(std::move(g));
    } else {
      kids.push_back(std::move(cc));
    }
  }
  std::stable_sort(kids.begin(), kids.end(), [](const Node& a, const Node& b) {
    return compare_node(a, b) < 0;
  });
  kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
  if (kids.size() == 1) return std::move(kids.front());
  Node out;
  out.op = n.op;
  out.children = std::move(kids);
  return out;
}

Node canon(const Node& n, bool negate) {
  switch (n.op) {
    case NodeOp::kLeaf: {
      Literal l = n.literal;
      l.negated = l.negated != negate;
      return Node::leaf(l);
    }
    case NodeOp::kNot:
      if (n.children.size() != 1) throw QueryError("NOT needs one child");
      return canon(n.children.front(), !negate);
    case NodeOp::kAnd:
    case NodeOp::kOr: {
      if (n.children.empty()) throw QueryError("empty connective");
      Node c = canon_compound(n);
      if (!negate) return c;
      if (c.op == NodeOp::kLeaf) {
        c.literal.negated = !c.literal.negated;
        return c;
      }
      return Node::negation(std::move(c));
    }
  }
  return n;
}

}  // namespace

namespace {

void hash_mix(std::size_t& h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
}

std::uint64_t double_bits(double d) {
  std::uint64_t u;
  std::memcpy(&u, &d, sizeof u);
  return u;
}

void hash_node(std::size_t& h, const Node& n) {
  hash_mix(h, static_cast<std::uint64_t>(n.op));
  if (n.op == NodeOp::kLeaf) {
    const Literal& l = n.literal;
    hash_mix(h, static_cast<std::uint64_t>(l.attribute));
    hash_mix(h, static_cast<std::uint64_t>(l.kind));
    hash_mix(h, double_bits(l.interval.lo));
    hash_mix(h, double_bits(l.interval.hi));
    hash_mix(h, (l.interval.lo_open ? 1u : 0u) | (l.interval.hi_open ? 2u : 0u) |
                    (l.negated ? 4u : 0u));
    hash_mix(h, static_cast<std::uint64_t>(l.category));
    return;
  }
  hash_mix(h, n.children.size());
  for (const auto& c : n.children) hash_node(h, c);
}

}  // namespace

std::size_t hash_query(const Query& q) {
  std::size_t h = static_cast<std::size_t>(q.view_id());
  hash_node(h, q.root());
  return h;
}

Query canonicalize(const Query& q) {
  return Query(q.view_id(), canon(q.root(), false));
}

Query conjoin(const Query& a, const Query& b) {
  if (a.view_id() != b.view_id()) throw QueryError("conjoin across views");
  return canonicalize(Query(a.view_id(), Node::all_of({a.root(), b.root()})));
}

Query disjoin(const Query& a, const Query& b) {
  if (a.view_id() != b.view_id()) throw QueryError("disjoin across views");
  return canonicalize(Query(a.view_id(), Node::any_of({a.root(), b.root()})));
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

Truth eval_node(const Node& n, std::span<const double> row) {
  switch (n.op) {
    case NodeOp::kLeaf: {
      const int a = n.literal.attribute;
      if (a < 0 || static_cast<std::size_t>(a) >= row.size()) {
        throw QueryError("attribute index " + std::to_string(a) +
                         " out of range");
      }
      return n.literal.eval(row[static_cast<std::size_t>(a)]);
    }
    case NodeOp::kNot:
      return kleene_not(eval_node(n.children.at(0), row));
    case NodeOp::kAnd: {
      Truth t = Truth::kTrue;
      for (const auto& c : n.children) t = kleene_and(t, eval_node(c, row));
      return t;
    }
    case NodeOp::kOr: {
      Truth t = Truth::kFalse;
      for (const auto& c : n.children) t = kleene_or(t, eval_node(c, row));
      return t;
    }
  }
  return Truth::kUnknown;
}

TriSupport literal_support(const Literal& lit, const View& view) {
  if (lit.attribute < 0 ||
      static_cast<std::size_t>(lit.attribute) >= view.num_attributes()) {
    throw QueryError("attribute index " + std::to_string(lit.attribute) +
                     " out of range");
  }
  const auto col = view.column(static_cast<std::size_t>(lit.attribute));
  const Interval r = lit.cell_range();
  TriSupport t{ElementSet(view.num_rows()), ElementSet(view.num_rows())};
  kernels::active().interval_mask(col.data(), col.size(),
                                  {r.lo, r.lo_open}, {r.hi, r.hi_open},
                                  t.in.mutable_words().data(),
                                  t.unknown.mutable_words().data());
  if (lit.negated) {
    ElementSet flipped = (t.in | t.unknown).complement();
    t.in = std::move(flipped);
  }
  return t;
}

TriSupport node_support(const Node& n, const View& view) {
  switch (n.op) {
    case NodeOp::kLeaf:
      return literal_support(n.literal, view);
    case NodeOp::kNot:
      return tri_not(node_support(n.children.at(0), view));
    case NodeOp::kAnd:
    case NodeOp::kOr: {
      TriSupport acc = node_support(n.children.at(0), view);
      for (std::size_t i = 1; i < n.children.size(); ++i) {
        TriSupport next = node_support(n.children[i], view);
        acc = n.op == NodeOp::kAnd ? tri_and(acc, next) : tri_or(acc, next);
      }
      return acc;
    }
  }
  return {};
}

}  // namespace

ElementSet TriSupport::out() const { return (in | unknown).complement(); }

Truth eval_query(const Query& q, std::span<const double> row) {
  return eval_node(q.root(), row);
}

TriSupport tri_support(const Query& q, const View& view) {
  return node_support(q.root(), view);
}

TriSupport tri_and(const TriSupport& a, const TriSupport& b) {
  TriSupport out;
  out.in = a.in & b.in;
  out.unknown = (a.in | a.unknown) & (b.in | b.unknown);
  out.unknown.subtract(out.in);
  return out;
}

TriSupport tri_or(const TriSupport& a, const TriSupport& b) {
  TriSupport out;
  out.in = a.in | b.in;
  out.unknown = a.unknown | b.unknown;
  out.unknown.subtract(out.in);
  return out;
}

TriSupport tri_not(const TriSupport& a) {
  return TriSupport{(a.in | a.unknown).complement(), a.unknown};
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !is_ident_start(s.front())) return false;
  return std::all_of(s.begin(), s.end(), is_ident_char);
}

std::string quote_name(std::string_view s) {
  if (is_identifier(s)) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\n':
        out += "\\n";
        break;
      default:
        out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const View& view, int view_id)
      : text_(text), view_(view), view_id_(view_id) {}

  Query parse() {
    Node root = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return canonicalize(Query(view_id_, std::move(root)));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw QueryError(what, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Node expr() {
    std::vector<Node> terms{term()};
    while (accept('|')) terms.push_back(term());
    return terms.size() == 1 ? std::move(terms.front())
                             : Node::any_of(std::move(terms));
  }

  Node term() {
    std::vector<Node> factors{factor()};
    while (accept('&')) factors.push_back(factor());
    return factors.size() == 1 ? std::move(factors.front())
                               : Node::all_of(std::move(factors));
  }

  Node factor() {
    if (accept('!')) return Node::negation(factor());
    if (accept('(')) {
      Node e = expr();
      expect(')');
      return e;
    }
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '[') return interval();
    return named_literal();
  }

  std::string name() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a name");
    if (text_[pos_] == '"') {
      ++pos_;
      std::string out;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        char c = text_[pos_++];
        if (c == '\\' && pos_ < text_.size()) {
          const char e = text_[pos_++];
          c = e == 't' ? '\t' : e == 'n' ? '\n' : e;
        }
        out.push_back(c);
      }
      if (pos_ >= text_.size()) fail("unterminated quoted name");
      ++pos_;
      return out;
    }
    if (!is_ident_start(text_[pos_])) fail("expected a name");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  const Attribute& resolve(const std::string& n, std::size_t at) {
    auto id = view_.find(n);
    if (!id) throw QueryError("unknown attribute '" + n + "'", at);
    return view_.attribute(static_cast<std::size_t>(*id));
  }

  double number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '.' || text_[pos_] == '+' || text_[pos_] == '-')) {
      ++pos_;
    }
    auto v = text::parse_double(text_.substr(start, pos_ - start));
    if (!v) {
      pos_ = start;
      fail("expected a number");
    }
    return *v;
  }

  bool comparator() {
    skip_ws();
    if (text_.substr(pos_, 2) == "<=") {
      pos_ += 2;
      return false;
    }
    if (pos_ < text_.size() && text_[pos_] == '<') {
      ++pos_;
      return true;
    }
    fail("expected '<=' or '<'");
  }

  Node interval() {
    const std::size_t start = pos_;
    expect('[');
    Interval iv;
    iv.lo = number();
    iv.lo_open = comparator();
    skip_ws();
    const std::size_t name_at = pos_;
    const std::string n = name();
    iv.hi_open = comparator();
    iv.hi = number();
    expect(']');
    const Attribute& a = resolve(n, name_at);
    if (a.kind != AttributeKind::kNumeric) {
      throw QueryError("interval on non-numeric attribute '" + n + "'",
                       name_at);
    }
    if (iv.lo > iv.hi) throw QueryError("inverted interval bounds", start);
    return Node::leaf(Literal::numeric(a.id, iv));
  }

  Node named_literal() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string n = name();
    const Attribute& a = resolve(n, at);
    if (accept('=')) {
      skip_ws();
      const std::size_t label_at = pos_;
      const std::string label = name_or_label();
      if (a.kind != AttributeKind::kCategorical) {
        throw QueryError("'=' test on non-categorical attribute '" + n + "'",
                         at);
      }
      auto idx = a.category_index(label);
      if (!idx) throw QueryError("unknown category '" + label + "'", label_at);
      return Node::leaf(Literal::categorical(a.id, *idx));
    }
    if (a.kind != AttributeKind::kBoolean) {
      throw QueryError("bare name requires a boolean attribute: '" + n + "'",
                       at);
    }
    return Node::leaf(Literal::boolean(a.id));
  }

  // Labels may also start with a digit.
  std::string name_or_label() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] != '"' &&
        std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      return std::string(text_.substr(start, pos_ - start));
    }
    return name();
  }

  std::string_view text_;
  const View& view_;
  int view_id_;
  std::size_t pos_ = 0;
};

}  // namespace

Query parse_query(std::string_view text, const View& view, int view_id) {
  return Parser(text, view, view_id).parse();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string print_label(std::string_view s) {
  const bool plain =
      !s.empty() && std::all_of(s.begin(), s.end(), is_ident_char) &&
      std::isalnum(static_cast<unsigned char>(s.front()));
  return plain ? std::string(s) : quote_name(s);
}

std::string print_literal(const Literal& l, const View& view) {
  if (l.attribute < 0 ||
      static_cast<std::size_t>(l.attribute) >= view.num_attributes()) {
    throw QueryError("attribute index out of range");
  }
  const Attribute& a = view.attribute(static_cast<std::size_t>(l.attribute));
  std::string body;
  switch (l.kind) {
    case AttributeKind::kNumeric:
      body = "[" + text::format_double(l.interval.lo) +
             (l.interval.lo_open ? " < " : " <= ") + quote_name(a.name) +
             (l.interval.hi_open ? " < " : " <= ") +
             text::format_double(l.interval.hi) + "]";
      break;
    case AttributeKind::kBoolean:
      body = quote_name(a.name);
      break;
    case AttributeKind::kCategorical:
      body = quote_name(a.name) + "=" +
             print_label(a.categories.at(static_cast<std::size_t>(l.category)));
      break;
  }
  return l.negated ? "!" + body : body;
}

std::string print_node(const Node& n, const View& view) {
  switch (n.op) {
    case NodeOp::kLeaf:
      return print_literal(n.literal, view);
    case NodeOp::kNot:
      return "!(" + print_node(n.children.at(0), view) + ")";
    case NodeOp::kAnd: {
      std::string out;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += " & ";
        const Node& c = n.children[i];
        out += c.op == NodeOp::kOr ? "(" + print_node(c, view) + ")"
                                   : print_node(c, view);
      }
      return out;
    }
    case NodeOp::kOr: {
      std::string out;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += " | ";
        out += print_node(n.children[i], view);
      }
      return out;
    }
  }
  return {};
}

}  // namespace

std::string print_query(const Query& q, const View& view) {
  return print_node(canonicalize(q).root(), view);
}

// ---------------------------------------------------------------------------
// Rewrites

namespace {

Node snap_node(const Node& n, const View& view) {
  if (n.op != NodeOp::kLeaf) {
    Node out = n;
    for (auto& c : out.children) c = snap_node(c, view);
    return out;
  }
  if (n.literal.kind != AttributeKind::kNumeric) return n;
  const auto col = view.column(static_cast<std::size_t>(n.literal.attribute));
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double x : col) {
    if (is_missing(x) || !n.literal.interval.contains(x)) continue;
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (lo > hi) return n;
  Literal l = n.literal;
  l.interval = Interval{lo, hi, false, false};
  return Node::leaf(l);
}

// Intersection of two intervals; nullopt when empty.
std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Interval r;
  if (a.lo > b.lo) {
    r.lo = a.lo;
    r.lo_open = a.lo_open;
  } else if (b.lo > a.lo) {
    r.lo = b.lo;
    r.lo_open = b.lo_open;
  } else {
    r.lo = a.lo;
    r.lo_open = a.lo_open || b.lo_open;
  }
  if (a.hi < b.hi) {
    r.hi = a.hi;
    r.hi_open = a.hi_open;
  } else if (b.hi < a.hi) {
    r.hi = b.hi;
    r.hi_open = b.hi_open;
  } else {
    r.hi = a.hi;
    r.hi_open = a.hi_open || b.hi_open;
  }
  if (r.lo > r.hi) return std::nullopt;
  if (r.lo == r.hi && (r.lo_open || r.hi_open)) return std::nullopt;
  return r;
}

Node merge_node(const Node& n) {
  if (n.op == NodeOp::kLeaf) return n;
  Node out = n;
  for (auto& c : out.children) c = merge_node(c);
  if (out.op != NodeOp::kAnd) return out;
  std::vector<Node> kids;
  for (auto& c : out.children) {
    const bool mergeable = c.op == NodeOp::kLeaf &&
                           c.literal.kind == AttributeKind::kNumeric &&
                           !c.literal.negated;
    bool merged = false;
    if (mergeable) {
      for (auto& k : kids) {
        if (k.op == NodeOp::kLeaf && k.literal.kind == AttributeKind::kNumeric &&
            !k.literal.negated && k.literal.attribute == c.literal.attribute) {
          if (auto iv = intersect(k.literal.interval, c.literal.interval)) {
            k.literal.interval = *iv;
            merged = true;
          }
          break;
        }
      }
    }
    if (!merged) kids.push_back(std::move(c));
  }
  if (kids.size() == 1) return std::move(kids.front());
  out.children = std::move(kids);
  return out;
}

std::size_t count_leaves(const Node& n) {
  if (n.op == NodeOp::kLeaf) return 1;
  std::size_t s = 0;
  for (const auto& c : n.children) s += count_leaves(c);
  return s;
}

// Removes the k-th leaf in preorder; nullopt when nothing remains.
std::optional<Node> remove_leaf(const Node& n, std::size_t& k) {
  if (n.op == NodeOp::kLeaf) {
    if (k == 0) {
      k = std::numeric_limits<std::size_t>::max();
      return std::nullopt;
    }
    --k;
    return n;
  }
  Node out;
  out.op = n.op;
  for (const auto& c : n.children) {
    if (auto r = remove_leaf(c, k)) out.children.push_back(std::move(*r));
  }
  if (out.children.empty()) return std::nullopt;
  if (out.op == NodeOp::kNot) return out;
  if (out.children.size() == 1) return std::move(out.children.front());
  return out;
}

}  // namespace

Query snap_intervals(const Query& q, const View& view) {
  return canonicalize(Query(q.view_id(), snap_node(q.root(), view)));
}

Query merge_intervals(const Query& q) {
  return canonicalize(Query(q.view_id(), merge_node(canonicalize(q).root())));
}

Query minimize_query(const Query& q, const View& view) {
  Query cur = merge_intervals(q);
  const TriSupport target = tri_support(cur, view);
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t leaves = count_leaves(cur.root());
    if (leaves <= 1) break;
    for (std::size_t i = 0; i < leaves; ++i) {
      std::size_t k = i;
      auto reduced = remove_leaf(cur.root(), k);
      if (!reduced) continue;
      Query cand = canonicalize(Query(cur.view_id(), std::move(*reduced)));
      if (tri_support(cand, view) == target) {
        cur = std::move(cand);
        changed = true;
        break;
      }
    }
  }
  return merge_intervals(cur);
}

}  // namespace redesc
