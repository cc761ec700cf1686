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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "redesc/measures.hpp"

namespace redesc {

// Redescription files hold one record per line, tab separated:
//
//   q1  q2  j_qnm  j_opt  j_pess  p_value  support_size  support
//
// Queries use the parse_query grammar; `support` lists row indices
// separated by spaces. Lines starting with '#' are comments. Only the two
// queries are read back: statistics are recomputed from the views.
inline constexpr std::string_view kInterchangeHeader =
    "# q1\tq2\tj_qnm\tj_opt\tj_pess\tp_value\tsupport_size\tsupport";

std::string format_record(const Redescription& r, const Dataset& data);
std::string format_interchange(std::span<const Redescription> items,
                               const Dataset& data);
void write_interchange(const std::filesystem::path& path,
                       std::span<const Redescription> items,
                       const Dataset& data);

struct RejectedRecord {
  std::string source;
  std::size_t line = 0;
  std::string message;
};

struct InterchangeLoad {
  std::vector<Redescription> items;
  std::vector<RejectedRecord> rejects;
};

// Malformed records are rejected individually; parsing continues.
InterchangeLoad parse_interchange(std::string_view text, const Dataset& data,
                                  const std::string& source = "<input>");
InterchangeLoad load_interchange(const std::filesystem::path& path,
                                 const Dataset& data);

}  // namespace redesc
