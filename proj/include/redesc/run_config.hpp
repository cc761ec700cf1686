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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "redesc/clusrm.hpp"
#include "redesc/grsc.hpp"
#include "redesc/measures.hpp"

namespace redesc {

// Settings shared by the command-line tools. Config files hold one
// `key = value` per line; '#' starts a comment. Keys:
//
//   view1, view2, schema1, schema2     paths, relative to the config file
//   min_jaccard, min_ref_jaccard, max_pvalue, min_support, max_support
//   max_iter, max_depth, min_leaf, target_window, seed, workers
//   refine (true/false), unique_support (true/false)
//   operator_mode (conj, conjneg, all)
//   disjunction_threshold, max_disjuncts, max_set_size
//   weights = wJ, wPV, wAJ, wEJ, wRQS, wRV   (repeatable, one row each)
//   sizes = 25, 50, ...                     reduced-set sizes
//   refilter (true/false)                   re-apply constraints in reduce
struct RunConfig {
  std::filesystem::path view1;
  std::filesystem::path view2;
  std::filesystem::path schema1;
  std::filesystem::path schema2;
  Constraints constraints;
  MiningParams mining;
  std::vector<WeightVector> weights;
  std::vector<std::size_t> sizes;
  bool refilter = false;

  // Canonical `key = value` dump; parse_config(to_text()) reproduces it.
  std::string to_text() const;
  // FNV-1a over to_text().
  std::uint64_t hash() const;
  void validate() const;
};

// Throws ConfigError naming the line on unknown keys or bad values.
// Relative paths are resolved against `base_dir`.
RunConfig parse_config(std::string_view text,
                       const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

std::vector<std::size_t> default_reduced_sizes();

}  // namespace redesc
