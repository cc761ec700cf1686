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

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace redesc {

enum class AttributeKind { kNumeric, kBoolean, kCategorical };

std::string_view kind_name(AttributeKind kind);

struct Attribute {
  int id = 0;
  std::string name;
  AttributeKind kind = AttributeKind::kNumeric;
  std::vector<std::string> categories;  // categorical only

  std::optional<int> category_index(std::string_view label) const;
  friend bool operator==(const Attribute&, const Attribute&) = default;
};

// Cells are stored as doubles: numbers as-is, booleans as 0/1, categories as
// their index in Attribute::categories. Missing cells are NaN.
inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();
inline bool is_missing(double cell) { return std::isnan(cell); }

// One |E| x |V| data matrix, stored column-major. Immutable after
// construction.
class View {
 public:
  View() = default;
  // Validates ids, name uniqueness, column lengths and cell kinds; throws
  // SchemaError.
  View(std::vector<Attribute> attributes,
       std::vector<std::vector<double>> columns);

  std::size_t num_rows() const { return num_rows_; }
  std::size_t num_attributes() const { return attributes_.size(); }

  const Attribute& attribute(std::size_t id) const { return attributes_[id]; }
  std::span<const Attribute> attributes() const { return attributes_; }
  std::optional<int> find(std::string_view name) const;

  std::span<const double> column(std::size_t id) const { return columns_[id]; }
  double cell(std::size_t row, std::size_t id) const {
    return columns_[id][row];
  }
  std::vector<double> row(std::size_t r) const;

  std::string format_cell(std::size_t row, std::size_t id) const;

  // Rows of `this` followed by rows of `other`; attributes must match.
  View concat_rows(const View& other) const;

  friend bool operator==(const View& a, const View& b);

 private:
  std::vector<Attribute> attributes_;
  std::vector<std::vector<double>> columns_;
  std::size_t num_rows_ = 0;
};

// The two-view dataset (V1, V2, E, W1, W2).
struct Dataset {
  View view1;
  View view2;
  std::vector<std::string> element_names;

  // Throws SchemaError when row counts or names disagree.
  Dataset(View v1, View v2, std::vector<std::string> names = {});

  std::size_t num_elements() const { return view1.num_rows(); }
  const View& view(int view_id) const { return view_id == 1 ? view1 : view2; }
  // |V1| + |V2|; attribute a of view 2 has global index |V1| + a.
  std::size_t num_attributes() const {
    return view1.num_attributes() + view2.num_attributes();
  }
};

// Per-column declaration in a schema file.
struct ColumnSpec {
  std::string name;
  AttributeKind kind = AttributeKind::kNumeric;
  bool is_id = false;
  std::vector<std::string> categories;  // empty: collect from data
};

// Schema file grammar, one declaration per line, '#' starts a comment:
//
//   <column> = numeric | boolean | id
//   <column> = categorical [: label, label, ...]
//   @default = numeric | boolean | categorical
//   @missing = token, token, ...
//
// "?" and the empty cell are always missing markers. @default covers columns
// the file does not name.
struct Schema {
  std::vector<ColumnSpec> columns;
  std::optional<AttributeKind> default_kind;
  std::vector<std::string> missing_markers{"?", ""};

  const ColumnSpec* find(std::string_view name) const;
};

Schema parse_schema(std::string_view text);
Schema load_schema(const std::filesystem::path& path);

struct LoadedView {
  View view;
  std::vector<std::string> element_names;  // empty without an id column
};

// Parses CSV text (header row, comma separated, RFC 4180 quoting).
LoadedView parse_view(std::string_view csv, const Schema& schema);
LoadedView load_view(const std::filesystem::path& path, const Schema& schema);

Dataset load_dataset(const std::filesystem::path& view1_csv,
                     const Schema& schema1,
                     const std::filesystem::path& view2_csv,
                     const Schema& schema2);

// Native format: CSV with an "id" column plus a schema file declaring every
// column. Reloading yields a cell-for-cell identical view.
std::string format_view_csv(const View& view,
                            std::span<const std::string> element_names);
std::string format_schema(const View& view);
void write_view(const View& view, std::span<const std::string> element_names,
                const std::filesystem::path& csv_path,
                const std::filesystem::path& schema_path);

// Independently permutes every column with a seeded Fisher-Yates shuffle.
// Missing cells move with the rest. Column multisets are preserved.
View make_artificial(const View& view, std::uint64_t seed);

// Fills every column independently with values drawn with replacement from
// the same column. Unlike make_artificial the marginals only match in
// expectation, so single-attribute tests can separate the copy from the
// original.
View make_resampled(const View& view, std::uint64_t seed);

// Uniform integer in [0, bound) from a 64-bit engine, by rejection.
// Platform-independent unlike std::uniform_int_distribution.
template <typename Engine>
std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace redesc
