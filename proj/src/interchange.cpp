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

#include "redesc/interchange.hpp"

#include <fstream>

#include "redesc/errors.hpp"
#include "redesc/text.hpp"

namespace redesc {

std::string format_record(const Redescription& r, const Dataset& data) {
  const RedescriptionStats& s = r.stats();
  std::string line = print_query(r.q1(), data.view1);
  line += '\t';
  line += print_query(r.q2(), data.view2);
  for (double v : {s.j_qnm, s.j_opt, s.j_pess, s.p_value}) {
    line += '\t';
    line += text::format_double(v);
  }
  line += '\t';
  line += std::to_string(s.support_size);
  line += '\t';
  bool first = true;
  r.support().for_each([&](std::size_t e) {
    if (!first) line += ' ';
    first = false;
    line += std::to_string(e);
  });
  return line;
}

std::string format_interchange(std::span<const Redescription> items,
                               const Dataset& data) {
  std::string out(kInterchangeHeader);
  out += '\n';
  for (const Redescription& r : items) {
    out += format_record(r, data);
    out += '\n';
  }
  return out;
}

void write_interchange(const std::filesystem::path& path,
                       std::span<const Redescription> items,
                       const Dataset& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << format_interchange(items, data);
  if (!out) throw Error("write failed: " + path.string());
}

InterchangeLoad parse_interchange(std::string_view text, const Dataset& data,
                                  const std::string& source) {
  InterchangeLoad out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || line.front() == '#') continue;

    const auto fields = text::split(line, '\t');
    if (fields.size() < 2) {
      out.rejects.push_back({source, line_no, "expected at least two tab-separated queries"});
      continue;
    }
    try {
      Query q1 = parse_query(fields[0], data.view1, 1);
      Query q2 = parse_query(fields[1], data.view2, 2);
      out.items.push_back(Redescription::evaluate(std::move(q1), std::move(q2), data));
    } catch (const Error& e) {
      out.rejects.push_back({source, line_no, e.what()});
    }
  }
  return out;
}

InterchangeLoad load_interchange(const std::filesystem::path& path,
                                 const Dataset& data) {
  if (!std::filesystem::exists(path)) {
    throw Error("redescription file not found: " + path.string());
  }
  return parse_interchange(text::read_file(path.string()), data, path.string());
}

}  // namespace redesc
