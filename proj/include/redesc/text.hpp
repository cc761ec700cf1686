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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace redesc::text {

// Shortest decimal form that parses back to the same double; "inf", "-inf"
// and "nan" for non-finite values.
std::string format_double(double v);

// Accepts everything format_double emits plus surrounding whitespace.
std::optional<double> parse_double(std::string_view s);

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
std::string to_lower(std::string_view s);

// Splits one CSV record honoring double-quote quoting. The input must be a
// complete record (quoted fields may contain newlines).
std::vector<std::string> split_csv_record(std::string_view record);

// Splits CSV text into records, keeping quoted newlines inside a record.
// Returns (record, 1-based starting line) pairs; blank lines are skipped.
std::vector<std::pair<std::string, std::size_t>> csv_records(
    std::string_view csv);

std::string quote_csv(std::string_view field);

std::string read_file(const std::string& path);

}  // namespace redesc::text
