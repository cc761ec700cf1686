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

#include "redesc/run_config.hpp"

#include <charconv>
#include <cmath>

#include "redesc/errors.hpp"
#include "redesc/text.hpp"

namespace redesc {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ConfigError("config line " + std::to_string(line) + ": " + what);
}

double to_double(std::string_view v, std::size_t line) {
  auto d = text::parse_double(v);
  if (!d) fail(line, "expected a number, got '" + std::string(v) + "'");
  return *d;
}

std::uint64_t to_unsigned(std::string_view v, std::size_t line) {
  std::uint64_t out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size()) {
    fail(line, "expected a non-negative integer, got '" + std::string(v) + "'");
  }
  return out;
}

bool to_bool(std::string_view v, std::size_t line) {
  const std::string t = text::to_lower(v);
  if (t == "true" || t == "yes" || t == "1" || t == "on") return true;
  if (t == "false" || t == "no" || t == "0" || t == "off") return false;
  fail(line, "expected true or false, got '" + std::string(v) + "'");
}

std::filesystem::path resolve(std::string_view v,
                              const std::filesystem::path& base) {
  std::filesystem::path p{std::string(v)};
  if (p.is_relative() && !base.empty()) p = base / p;
  return p;
}

}  // namespace

std::vector<std::size_t> default_reduced_sizes() {
  return {25, 50, 75, 100, 125, 150, 175, 200};
}

RunConfig parse_config(std::string_view text,
                       const std::filesystem::path& base_dir) {
  RunConfig c;
  std::size_t line_no = 0;
  for (std::string_view raw : text::split(text, '\n')) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    const std::string_view line = text::trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected key = value");
    const std::string key = text::to_lower(text::trim(line.substr(0, eq)));
    const std::string_view value = text::trim(line.substr(eq + 1));

    if (key == "view1") {
      c.view1 = resolve(value, base_dir);
    } else if (key == "view2") {
      c.view2 = resolve(value, base_dir);
    } else if (key == "schema1") {
      c.schema1 = resolve(value, base_dir);
    } else if (key == "schema2") {
      c.schema2 = resolve(value, base_dir);
    } else if (key == "min_jaccard") {
      c.constraints.min_jaccard = to_double(value, line_no);
    } else if (key == "min_ref_jaccard") {
      c.constraints.min_ref_jaccard = to_double(value, line_no);
    } else if (key == "max_pvalue") {
      c.constraints.max_pvalue = to_double(value, line_no);
    } else if (key == "min_support") {
      c.constraints.min_support = to_unsigned(value, line_no);
    } else if (key == "max_support") {
      c.constraints.max_support = to_unsigned(value, line_no);
    } else if (key == "max_iter") {
      c.mining.max_iter = static_cast<int>(to_unsigned(value, line_no));
    } else if (key == "max_depth") {
      c.mining.pct.max_depth = static_cast<int>(to_unsigned(value, line_no));
    } else if (key == "min_leaf") {
      c.mining.min_leaf = to_unsigned(value, line_no);
    } else if (key == "target_window") {
      c.mining.target_window = to_unsigned(value, line_no);
    } else if (key == "seed") {
      c.mining.seed = to_unsigned(value, line_no);
    } else if (key == "workers") {
      c.mining.workers = to_unsigned(value, line_no);
    } else if (key == "refine") {
      c.mining.use_refinement = to_bool(value, line_no);
    } else if (key == "unique_support") {
      c.mining.unique_support = to_bool(value, line_no);
    } else if (key == "operator_mode") {
      try {
        c.mining.operator_mode = parse_operator_mode(value);
      } catch (const ConfigError& e) {
        fail(line_no, e.what());
      }
    } else if (key == "disjunction_threshold") {
      c.mining.disjunction_threshold = to_double(value, line_no);
    } else if (key == "max_disjuncts") {
      c.mining.max_disjuncts = to_unsigned(value, line_no);
    } else if (key == "max_set_size") {
      c.mining.max_set_size = to_unsigned(value, line_no);
    } else if (key == "weights") {
      const auto parts = text::split(value, ',');
      if (parts.size() != 6) fail(line_no, "weights need six comma-separated values");
      std::array<double, 6> w{};
      for (std::size_t i = 0; i < 6; ++i) w[i] = to_double(text::trim(parts[i]), line_no);
      c.weights.push_back(WeightVector::from_array(w));
    } else if (key == "sizes") {
      c.sizes.clear();
      for (auto part : text::split(value, ',')) {
        c.sizes.push_back(to_unsigned(text::trim(part), line_no));
      }
    } else if (key == "refilter") {
      c.refilter = to_bool(value, line_no);
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw ConfigError("config file not found: " + path.string());
  }
  return parse_config(text::read_file(path.string()), path.parent_path());
}

void RunConfig::validate() const {
  constraints.validate();
  mining.validate();
  for (const auto& w : weights) w.validate();
  for (std::size_t s : sizes) {
    if (s == 0) throw ConfigError("reduced-set sizes must be at least 1");
  }
}

std::string RunConfig::to_text() const {
  using text::format_double;
  std::string out;
  const auto put = [&](std::string_view k, const std::string& v) {
    out += k;
    out += " = ";
    out += v;
    out += '\n';
  };
  const auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  if (!view1.empty()) put("view1", view1.string());
  if (!view2.empty()) put("view2", view2.string());
  if (!schema1.empty()) put("schema1", schema1.string());
  if (!schema2.empty()) put("schema2", schema2.string());
  put("min_jaccard", format_double(constraints.min_jaccard));
  put("min_ref_jaccard", format_double(constraints.min_ref_jaccard));
  put("max_pvalue", format_double(constraints.max_pvalue));
  put("min_support", std::to_string(constraints.min_support));
  put("max_support", std::to_string(constraints.max_support));
  put("max_iter", std::to_string(mining.max_iter));
  put("max_depth", std::to_string(mining.pct.max_depth));
  put("min_leaf", std::to_string(mining.min_leaf));
  put("target_window", std::to_string(mining.target_window));
  put("seed", std::to_string(mining.seed));
  put("workers", std::to_string(mining.workers));
  put("refine", flag(mining.use_refinement));
  put("unique_support", flag(mining.unique_support));
  put("operator_mode", std::string(operator_mode_name(mining.operator_mode)));
  put("disjunction_threshold", format_double(mining.disjunction_threshold));
  put("max_disjuncts", std::to_string(mining.max_disjuncts));
  put("max_set_size", std::to_string(mining.max_set_size));
  for (const auto& w : weights) {
    std::string row;
    for (double v : w.to_array()) {
      if (!row.empty()) row += ", ";
      row += format_double(v);
    }
    put("weights", row);
  }
  if (!sizes.empty()) {
    std::string row;
    for (std::size_t s : sizes) {
      if (!row.empty()) row += ", ";
      row += std::to_string(s);
    }
    put("sizes", row);
  }
  put("refilter", flag(refilter));
  return out;
}

std::uint64_t RunConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : to_text()) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace redesc
