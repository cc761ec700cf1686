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

// Command-line front end: mine, reduce and evaluate redescription sets.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "redesc/clusrm.hpp"
#include "redesc/errors.hpp"
#include "redesc/evaluation.hpp"
#include "redesc/grsc.hpp"
#include "redesc/interchange.hpp"
#include "redesc/kernels.hpp"
#include "redesc/run_config.hpp"
#include "redesc/version.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace redesc;

namespace {

constexpr int kExitError = 1;
constexpr int kExitMissingFile = 2;

// Missing input files exit with a distinct status.
class MissingFile : public Error {
 public:
  explicit MissingFile(const fs::path& p)
      : Error("file not found: " + p.string()) {}
};

struct Options {
  std::string view1;
  std::string view2;
  std::string schema1;
  std::string schema2;
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::string operator_mode;
  bool no_refine = false;
  std::vector<std::string> inputs;
  std::vector<std::size_t> sizes;
  bool refilter = false;
};

void require_file(const fs::path& p) {
  if (!fs::exists(p)) throw MissingFile(p);
}

RunConfig resolve_config(const Options& o) {
  RunConfig c;
  if (!o.config.empty()) {
    require_file(o.config);
    c = load_config(o.config);
  }
  if (!o.view1.empty()) c.view1 = o.view1;
  if (!o.view2.empty()) c.view2 = o.view2;
  if (!o.schema1.empty()) c.schema1 = o.schema1;
  if (!o.schema2.empty()) c.schema2 = o.schema2;
  if (o.seed) c.mining.seed = *o.seed;
  if (o.workers) c.mining.workers = *o.workers;
  if (!o.operator_mode.empty()) {
    c.mining.operator_mode = parse_operator_mode(o.operator_mode);
  }
  if (o.no_refine) c.mining.use_refinement = false;
  if (!o.sizes.empty()) c.sizes = o.sizes;
  if (o.refilter) c.refilter = true;
  c.validate();
  if (c.view1.empty() || c.view2.empty()) {
    throw ConfigError("both --view1 and --view2 (or view1/view2 in the config) are required");
  }
  return c;
}

Schema schema_or_default(const fs::path& p) {
  if (p.empty()) {
    Schema s;
    s.default_kind = AttributeKind::kNumeric;
    return s;
  }
  require_file(p);
  return load_schema(p);
}

Dataset load_data(const RunConfig& c) {
  require_file(c.view1);
  require_file(c.view2);
  const Schema s1 = schema_or_default(c.schema1);
  const Schema s2 = schema_or_default(c.schema2);
  return load_dataset(c.view1, s1, c.view2, s2);
}

bool has_missing(const View& v) {
  for (std::size_t a = 0; a < v.num_attributes(); ++a) {
    for (double x : v.column(a)) {
      if (is_missing(x)) return true;
    }
  }
  return false;
}

void write_text(const fs::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write " + p.string());
  out << s;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json constraints_json(const Constraints& c) {
  json j;
  j["min_jaccard"] = c.min_jaccard;
  j["min_ref_jaccard"] = c.min_ref_jaccard;
  j["max_pvalue"] = c.max_pvalue;
  j["min_support"] = c.min_support;
  j["max_support"] = c.max_support;
  return j;
}

json rejects_json(const std::vector<RejectedRecord>& rejects) {
  json arr = json::array();
  for (const auto& r : rejects) {
    arr.push_back({{"file", r.source}, {"line", r.line}, {"message", r.message}});
    std::cerr << "warning: " << r.source << ":" << r.line << ": " << r.message << "\n";
  }
  return arr;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_mine(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const RunConfig c = resolve_config(o);
  const Dataset data = load_data(c);
  const double load_s = seconds_since(t0);

  const auto t1 = std::chrono::steady_clock::now();
  MiningReport report;
  const RedescriptionSet set = mine(data, c.constraints, c.mining, &report);
  const double mine_s = seconds_since(t1);

  const std::string records = format_interchange(set.items(), data);
  if (o.out.empty()) {
    std::cout << records;
    return 0;
  }
  fs::create_directories(o.out);
  write_text(fs::path(o.out) / "redescriptions.tsv", records);

  std::size_t perfect = 0;
  for (const auto& r : set.items()) perfect += r.jaccard() == 1.0 ? 1 : 0;
  json j;
  j["tool"] = "redesc";
  j["version"] = std::string(kVersion);
  j["command"] = "mine";
  j["seed"] = c.mining.seed;
  j["config_hash"] = hex64(c.hash());
  j["kernels"] = std::string(kernels::isa_name(kernels::active().isa));
  j["dataset"] = {{"elements", data.num_elements()},
                  {"view1_attributes", data.view1.num_attributes()},
                  {"view2_attributes", data.view2.num_attributes()}};
  j["constraints"] = constraints_json(c.constraints);
  j["mining"] = {{"max_iter", c.mining.max_iter},
                 {"max_depth", c.mining.pct.max_depth},
                 {"operator_mode", std::string(operator_mode_name(c.mining.operator_mode))},
                 {"refine", c.mining.use_refinement},
                 {"target_window", c.mining.target_window},
                 {"unique_support", c.mining.unique_support},
                 {"workers", c.mining.workers}};
  j["counts"] = {{"redescriptions", set.size()},
                 {"jaccard_one", perfect},
                 {"rules_view1", report.rules1},
                 {"rules_view2", report.rules2},
                 {"candidates", report.candidates},
                 {"disjunctive_added", report.disjunctive_added},
                 {"cap_reductions", report.reductions},
                 {"iterations", report.iterations}};
  j["timing_seconds"] = {{"load", load_s}, {"mine", mine_s}};
  write_text(fs::path(o.out) / "report.json", j.dump(2) + "\n");
  std::cerr << "mined " << set.size() << " redescriptions -> " << o.out << "\n";
  return 0;
}

// Loads and merges interchange files, dropping repeated query pairs.
std::vector<Redescription> load_pool(const std::vector<std::string>& inputs,
                                     const Dataset& data,
                                     std::vector<RejectedRecord>& rejects) {
  RedescriptionSet pool(false);
  for (const auto& in : inputs) {
    require_file(in);
    InterchangeLoad loaded = load_interchange(in, data);
    for (auto& r : loaded.items) pool.insert(std::move(r));
    for (auto& r : loaded.rejects) rejects.push_back(std::move(r));
  }
  return pool.release();
}

int run_reduce(const Options& o) {
  if (o.out.empty()) throw ConfigError("reduce needs --out");
  const RunConfig c = resolve_config(o);
  const Dataset data = load_data(c);
  std::vector<RejectedRecord> rejects;
  const std::vector<Redescription> pool = load_pool(o.inputs, data, rejects);

  std::vector<WeightVector> rows = c.weights;
  if (rows.empty()) {
    const bool missing = has_missing(data.view1) || has_missing(data.view2);
    const auto defaults = missing ? missing_value_weight_rows() : default_weight_rows();
    rows.assign(defaults.begin(), defaults.end());
  }
  const std::vector<std::size_t> sizes =
      c.sizes.empty() ? default_reduced_sizes() : c.sizes;
  std::optional<Constraints> filter;
  if (c.refilter) filter = c.constraints;

  fs::create_directories(o.out);
  json outputs = json::array();
  for (std::size_t n : sizes) {
    if (pool.empty()) break;
    const auto reduced = reduce_set(pool, rows, n, filter, data.num_elements(),
                                    data.num_attributes(), c.mining.workers);
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      std::vector<Redescription> items;
      for (std::size_t i : reduced[r].members) items.push_back(pool[i]);
      const std::string name =
          "reduced_r" + std::to_string(r + 1) + "_n" + std::to_string(n) + ".tsv";
      write_interchange(fs::path(o.out) / name, items, data);
      if (reduced[r].filtered_out) {
        std::cerr << "warning: no redescription passed the constraints for row "
                  << r + 1 << "\n";
      }
      outputs.push_back({{"file", name},
                         {"row", r + 1},
                         {"weights", reduced[r].weights.to_array()},
                         {"size", n},
                         {"selected", items.size()},
                         {"filtered_out", reduced[r].filtered_out}});
    }
  }

  json j;
  j["tool"] = "redesc";
  j["version"] = std::string(kVersion);
  j["command"] = "reduce";
  j["config_hash"] = hex64(c.hash());
  j["inputs"] = o.inputs;
  j["pool_size"] = pool.size();
  j["rejected"] = rejects.size();
  j["rejects"] = rejects_json(rejects);
  if (filter) j["constraints"] = constraints_json(*filter);
  j["outputs"] = outputs;
  write_text(fs::path(o.out) / "reduce_report.json", j.dump(2) + "\n");
  std::cerr << "reduced a pool of " << pool.size() << " into " << outputs.size()
            << " sets -> " << o.out << "\n";
  return 0;
}

int run_eval(const Options& o) {
  const RunConfig c = resolve_config(o);
  const Dataset data = load_data(c);
  std::vector<RejectedRecord> rejects;
  std::vector<Redescription> items;
  for (const auto& in : o.inputs) {
    require_file(in);
    InterchangeLoad loaded = load_interchange(in, data);
    for (auto& r : loaded.items) items.push_back(std::move(r));
    for (auto& r : loaded.rejects) rejects.push_back(std::move(r));
  }
  rejects_json(rejects);
  const std::string rows = format_eval_rows(items, data);
  const std::string summary = format_eval_summary(summarize(items, data));
  if (o.out.empty()) {
    std::cout << rows << "\n" << summary;
    return 0;
  }
  fs::create_directories(o.out);
  write_text(fs::path(o.out) / "eval_redescriptions.csv", rows);
  write_text(fs::path(o.out) / "eval_summary.csv", summary);
  return 0;
}

void add_data_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--view1", o.view1, "CSV file of the first view");
  cmd->add_option("--view2", o.view2, "CSV file of the second view");
  cmd->add_option("--schema1", o.schema1, "Schema file of the first view");
  cmd->add_option("--schema2", o.schema2, "Schema file of the second view");
  cmd->add_option("--config", o.config, "key = value configuration file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-view redescription mining and set construction"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;

  auto* mine_cmd = app.add_subcommand("mine", "Mine redescriptions from two views");
  add_data_options(mine_cmd, o);
  mine_cmd->add_option("--seed", o.seed, "Random seed");
  mine_cmd->add_option("--out", o.out, "Output directory (default: records to stdout)");
  mine_cmd->add_option("--workers", o.workers, "Worker threads");
  mine_cmd->add_option("--operator-mode", o.operator_mode, "conj, conjneg or all")
      ->check(CLI::IsMember({"conj", "conjneg", "all"}));
  mine_cmd->add_flag("--no-refine", o.no_refine, "Disable conjunctive refinement");

  auto* reduce_cmd =
      app.add_subcommand("reduce", "Build reduced sets from redescription files");
  add_data_options(reduce_cmd, o);
  reduce_cmd->add_option("inputs", o.inputs, "Redescription files")->required();
  reduce_cmd->add_option("--out", o.out, "Output directory")->required();
  reduce_cmd->add_option("--workers", o.workers, "Worker threads");
  reduce_cmd->add_option("--size", o.sizes, "Reduced-set size (repeatable)");
  reduce_cmd->add_flag("--filter", o.refilter, "Re-apply the configured constraints");

  auto* eval_cmd = app.add_subcommand("eval", "Report statistics of redescription files");
  add_data_options(eval_cmd, o);
  eval_cmd->add_option("inputs", o.inputs, "Redescription files")->required();
  eval_cmd->add_option("--out", o.out, "Output directory (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*mine_cmd) return run_mine(o);
    if (*reduce_cmd) return run_reduce(o);
    return run_eval(o);
  } catch (const MissingFile& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMissingFile;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
