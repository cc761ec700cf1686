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

#include "redesc/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "redesc/errors.hpp"
#include "redesc/text.hpp"

namespace redesc {

std::string_view kind_name(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::kNumeric:
      return "numeric";
    case AttributeKind::kBoolean:
      return "boolean";
    case AttributeKind::kCategorical:
      return "categorical";
  }
  return "unknown";
}

std::optional<int> Attribute::category_index(std::string_view label) const {
  for (std::size_t i = 0; i < categories.size(); ++i) {
    if (categories[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

View::View(std::vector<Attribute> attributes,
           std::vector<std::vector<double>> columns)
    : attributes_(std::move(attributes)), columns_(std::move(columns)) {
  if (attributes_.size() != columns_.size()) {
    throw SchemaError("attribute count does not match column count");
  }
  num_rows_ = columns_.empty() ? 0 : columns_.front().size();
  std::unordered_set<std::string> names;
  for (std::size_t a = 0; a < attributes_.size(); ++a) {
    const Attribute& attr = attributes_[a];
    if (attr.id != static_cast<int>(a)) {
      throw SchemaError("attribute ids must be dense and ordered: " +
                        attr.name);
    }
    if (!names.insert(attr.name).second) {
      throw SchemaError("duplicate attribute name: " + attr.name);
    }
    if (attr.kind == AttributeKind::kCategorical && attr.categories.empty()) {
      throw SchemaError("categorical attribute without categories: " +
                        attr.name);
    }
    if (columns_[a].size() != num_rows_) {
      throw SchemaError("column length mismatch for attribute " + attr.name);
    }
    for (double v : columns_[a]) {
      if (is_missing(v)) continue;
      switch (attr.kind) {
        case AttributeKind::kNumeric:
          break;
        case AttributeKind::kBoolean:
          if (v != 0.0 && v != 1.0) {
            throw SchemaError("non-boolean cell in " + attr.name);
          }
          break;
        case AttributeKind::kCategorical:
          if (v < 0 || v >= static_cast<double>(attr.categories.size()) ||
              v != std::floor(v)) {
            throw SchemaError("category index out of range in " + attr.name);
          }
          break;
      }
    }
  }
}

std::optional<int> View::find(std::string_view name) const {
  for (const auto& a : attributes_) {
    if (a.name == name) return a.id;
  }
  return std::nullopt;
}

std::vector<double> View::row(std::size_t r) const {
  std::vector<double> out(attributes_.size());
  for (std::size_t a = 0; a < attributes_.size(); ++a) out[a] = columns_[a][r];
  return out;
}

std::string View::format_cell(std::size_t row, std::size_t id) const {
  const double v = columns_[id][row];
  if (is_missing(v)) return "?";
  const Attribute& attr = attributes_[id];
  switch (attr.kind) {
    case AttributeKind::kNumeric:
      return text::format_double(v);
    case AttributeKind::kBoolean:
      return v != 0.0 ? "1" : "0";
    case AttributeKind::kCategorical:
      return attr.categories[static_cast<std::size_t>(v)];
  }
  return "?";
}

View View::concat_rows(const View& other) const {
  if (attributes_ != other.attributes_) {
    throw SchemaError("cannot concatenate views with different attributes");
  }
  auto cols = columns_;
  for (std::size_t a = 0; a < cols.size(); ++a) {
    cols[a].insert(cols[a].end(), other.columns_[a].begin(),
                   other.columns_[a].end());
  }
  return View(attributes_, std::move(cols));
}

bool operator==(const View& a, const View& b) {
  if (a.attributes_ != b.attributes_ || a.num_rows_ != b.num_rows_) {
    return false;
  }
  for (std::size_t c = 0; c < a.columns_.size(); ++c) {
    for (std::size_t r = 0; r < a.num_rows_; ++r) {
      const double x = a.columns_[c][r];
      const double y = b.columns_[c][r];
      if (is_missing(x) != is_missing(y)) return false;
      if (!is_missing(x) && x != y) return false;
    }
  }
  return true;
}

Dataset::Dataset(View v1, View v2, std::vector<std::string> names)
    : view1(std::move(v1)), view2(std::move(v2)),
      element_names(std::move(names)) {
  if (view1.num_rows() != view2.num_rows()) {
    throw SchemaError("views have different row counts: " +
                      std::to_string(view1.num_rows()) + " vs " +
                      std::to_string(view2.num_rows()));
  }
  if (element_names.empty()) {
    element_names.reserve(view1.num_rows());
    for (std::size_t i = 0; i < view1.num_rows(); ++i) {
      element_names.push_back(std::to_string(i));
    }
  }
  if (element_names.size() != view1.num_rows()) {
    throw SchemaError("element name count does not match row count");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : element_names) {
    if (!seen.insert(n).second) {
      throw SchemaError("duplicate element name: " + n);
    }
  }
}

const ColumnSpec* Schema::find(std::string_view name) const {
  for (const auto& c : columns) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

std::optional<AttributeKind> parse_kind(std::string_view s) {
  const std::string k = text::to_lower(text::trim(s));
  if (k == "numeric" || k == "real" || k == "numerical") {
    return AttributeKind::kNumeric;
  }
  if (k == "boolean" || k == "bool" || k == "binary") {
    return AttributeKind::kBoolean;
  }
  if (k == "categorical" || k == "nominal") return AttributeKind::kCategorical;
  return std::nullopt;
}

std::optional<double> parse_bool(std::string_view s) {
  const std::string k = text::to_lower(text::trim(s));
  if (k == "1" || k == "true" || k == "t" || k == "yes" || k == "y") return 1.0;
  if (k == "0" || k == "false" || k == "f" || k == "no" || k == "n") return 0.0;
  return std::nullopt;
}

}  // namespace

Schema parse_schema(std::string_view text_in) {
  Schema schema;
  std::unordered_set<std::string> names;
  std::size_t line_no = 0;
  for (std::string_view line : text::split(text_in, '\n')) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = text::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected '<column> = <kind>'", line_no);
    }
    const std::string key(text::trim(line.substr(0, eq)));
    std::string_view value = text::trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError("empty column name", line_no);

    if (key == "@missing") {
      for (auto tok : text::split(value, ',')) {
        schema.missing_markers.emplace_back(text::trim(tok));
      }
      continue;
    }
    if (key == "@default") {
      auto kind = parse_kind(value);
      if (!kind) throw ParseError("unknown kind in @default", line_no);
      schema.default_kind = *kind;
      continue;
    }
    if (!names.insert(key).second) {
      throw SchemaError("duplicate column in schema: " + key);
    }
    ColumnSpec spec;
    spec.name = key;
    std::string_view kind_text = value;
    std::string_view labels;
    if (auto colon = value.find(':'); colon != std::string_view::npos) {
      kind_text = value.substr(0, colon);
      labels = value.substr(colon + 1);
    }
    if (text::to_lower(text::trim(kind_text)) == "id") {
      spec.is_id = true;
    } else {
      auto kind = parse_kind(kind_text);
      if (!kind) {
        throw ParseError("unknown kind '" + std::string(kind_text) + "'",
                         line_no);
      }
      spec.kind = *kind;
    }
    if (!labels.empty()) {
      if (spec.kind != AttributeKind::kCategorical) {
        throw ParseError("labels given for non-categorical column", line_no);
      }
      for (auto tok : text::split(labels, ',')) {
        tok = text::trim(tok);
        if (tok.empty()) throw ParseError("empty category label", line_no);
        spec.categories.emplace_back(tok);
      }
    }
    schema.columns.push_back(std::move(spec));
  }
  return schema;
}

Schema load_schema(const std::filesystem::path& path) {
  return parse_schema(text::read_file(path.string()));
}

LoadedView parse_view(std::string_view csv, const Schema& schema) {
  const auto records = text::csv_records(csv);
  if (records.empty()) throw ParseError("missing header row", 1);

  std::vector<std::string> header = text::split_csv_record(records[0].first);
  for (auto& h : header) h = std::string(text::trim(h));
  {
    std::unordered_set<std::string> seen;
    for (const auto& h : header) {
      if (!seen.insert(h).second) {
        throw SchemaError("duplicate column name in header: " + h);
      }
    }
  }

  std::vector<ColumnSpec> specs;
  int id_column = -1;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (const ColumnSpec* s = schema.find(header[c])) {
      specs.push_back(*s);
    } else if (schema.default_kind) {
      specs.push_back(ColumnSpec{header[c], *schema.default_kind, false, {}});
    } else {
      throw SchemaError("schema does not cover column: " + header[c]);
    }
    if (specs.back().is_id) {
      if (id_column >= 0) throw SchemaError("more than one id column");
      id_column = static_cast<int>(c);
    }
  }

  const std::unordered_set<std::string> missing(schema.missing_markers.begin(),
                                                schema.missing_markers.end());
  std::vector<std::vector<double>> columns(header.size());
  std::vector<std::unordered_map<std::string, int>> label_maps(header.size());
  for (std::size_t c = 0; c < specs.size(); ++c) {
    for (std::size_t i = 0; i < specs[c].categories.size(); ++i) {
      label_maps[c].emplace(specs[c].categories[i], static_cast<int>(i));
    }
  }
  std::vector<std::string> names;

  for (std::size_t r = 1; r < records.size(); ++r) {
    const std::size_t line = records[r].second;
    auto fields = text::split_csv_record(records[r].first);
    if (fields.size() != header.size()) {
      throw ParseError("expected " + std::to_string(header.size()) +
                           " fields, found " + std::to_string(fields.size()),
                       line);
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      const std::string tok(text::trim(fields[c]));
      ColumnSpec& spec = specs[c];
      if (spec.is_id) {
        names.push_back(tok);
        continue;
      }
      if (missing.contains(tok)) {
        columns[c].push_back(kMissing);
        continue;
      }
      switch (spec.kind) {
        case AttributeKind::kNumeric: {
          auto v = text::parse_double(tok);
          if (!v) {
            throw ParseError("non-numeric value '" + tok + "' in column " +
                                 spec.name,
                             line);
          }
          columns[c].push_back(*v);
          break;
        }
        case AttributeKind::kBoolean: {
          auto v = parse_bool(tok);
          if (!v) {
            throw ParseError("non-boolean value '" + tok + "' in column " +
                                 spec.name,
                             line);
          }
          columns[c].push_back(*v);
          break;
        }
        case AttributeKind::kCategorical: {
          auto it = label_maps[c].find(tok);
          if (it == label_maps[c].end()) {
            if (!schema.find(spec.name) ||
                schema.find(spec.name)->categories.empty()) {
              const int idx = static_cast<int>(spec.categories.size());
              spec.categories.push_back(tok);
              it = label_maps[c].emplace(tok, idx).first;
            } else {
              throw ParseError("undeclared category '" + tok +
                                   "' in column " + spec.name,
                               line);
            }
          }
          columns[c].push_back(static_cast<double>(it->second));
          break;
        }
      }
    }
  }

  std::vector<Attribute> attrs;
  std::vector<std::vector<double>> data;
  for (std::size_t c = 0; c < specs.size(); ++c) {
    if (specs[c].is_id) continue;
    Attribute a;
    a.id = static_cast<int>(attrs.size());
    a.name = specs[c].name;
    a.kind = specs[c].kind;
    a.categories = specs[c].categories;
    if (a.kind == AttributeKind::kCategorical && a.categories.empty()) {
      // All-missing categorical column; keep it valid.
      a.categories.push_back("?");
    }
    attrs.push_back(std::move(a));
    data.push_back(std::move(columns[c]));
  }
  // A view with only an id column still needs its row count.
  if (data.empty() && records.size() > 1) {
    throw SchemaError("view has no attribute columns");
  }
  return LoadedView{View(std::move(attrs), std::move(data)), std::move(names)};
}

LoadedView load_view(const std::filesystem::path& path, const Schema& schema) {
  if (!std::filesystem::exists(path)) {
    throw Error("data file not found: " + path.string());
  }
  try {
    return parse_view(text::read_file(path.string()), schema);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

Dataset load_dataset(const std::filesystem::path& view1_csv,
                     const Schema& schema1,
                     const std::filesystem::path& view2_csv,
                     const Schema& schema2) {
  LoadedView a = load_view(view1_csv, schema1);
  LoadedView b = load_view(view2_csv, schema2);
  std::vector<std::string> names;
  if (!a.element_names.empty() && !b.element_names.empty() &&
      a.element_names != b.element_names) {
    throw SchemaError("id columns of the two views disagree");
  }
  names = !a.element_names.empty() ? std::move(a.element_names)
                                   : std::move(b.element_names);
  return Dataset(std::move(a.view), std::move(b.view), std::move(names));
}

std::string format_view_csv(const View& view,
                            std::span<const std::string> element_names) {
  std::string out = "id";
  for (const auto& a : view.attributes()) out += "," + text::quote_csv(a.name);
  out += "\n";
  for (std::size_t r = 0; r < view.num_rows(); ++r) {
    out += text::quote_csv(r < element_names.size() ? element_names[r]
                                                    : std::to_string(r));
    for (std::size_t a = 0; a < view.num_attributes(); ++a) {
      out += "," + text::quote_csv(view.format_cell(r, a));
    }
    out += "\n";
  }
  return out;
}

std::string format_schema(const View& view) {
  std::string out = "id = id\n";
  for (const auto& a : view.attributes()) {
    out += a.name + " = " + std::string(kind_name(a.kind));
    if (a.kind == AttributeKind::kCategorical) {
      out += ":";
      for (std::size_t i = 0; i < a.categories.size(); ++i) {
        out += (i ? ", " : " ") + a.categories[i];
      }
    }
    out += "\n";
  }
  return out;
}

void write_view(const View& view, std::span<const std::string> element_names,
                const std::filesystem::path& csv_path,
                const std::filesystem::path& schema_path) {
  std::ofstream csv(csv_path, std::ios::binary);
  std::ofstream schema(schema_path, std::ios::binary);
  if (!csv || !schema) throw Error("cannot write view files");
  csv << format_view_csv(view, element_names);
  schema << format_schema(view);
}

View make_artificial(const View& view, std::uint64_t seed) {
  if (view.num_rows() == 0) throw Error("cannot shuffle an empty view");
  std::mt19937_64 rng(seed);
  std::vector<Attribute> attrs(view.attributes().begin(),
                               view.attributes().end());
  std::vector<std::vector<double>> cols;
  cols.reserve(view.num_attributes());
  for (std::size_t a = 0; a < view.num_attributes(); ++a) {
    auto col = view.column(a);
    std::vector<double> c(col.begin(), col.end());
    for (std::size_t i = c.size(); i > 1; --i) {
      const std::size_t j = uniform_below(rng, i);
      std::swap(c[i - 1], c[j]);
    }
    cols.push_back(std::move(c));
  }
  return View(std::move(attrs), std::move(cols));
}

View make_resampled(const View& view, std::uint64_t seed) {
  if (view.num_rows() == 0) throw Error("cannot resample an empty view");
  std::mt19937_64 rng(seed);
  std::vector<Attribute> attrs(view.attributes().begin(),
                               view.attributes().end());
  std::vector<std::vector<double>> cols;
  cols.reserve(view.num_attributes());
  for (std::size_t a = 0; a < view.num_attributes(); ++a) {
    auto col = view.column(a);
    std::vector<double> c(col.size());
    for (double& v : c) v = col[uniform_below(rng, col.size())];
    cols.push_back(std::move(c));
  }
  return View(std::move(attrs), std::move(cols));
}

}  // namespace redesc
