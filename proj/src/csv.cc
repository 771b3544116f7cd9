// Copyright 2026 The dnnreuse Authors. All Rights Reserved.
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

#include "dnnreuse/csv.h"

#include <charconv>
#include <fstream>
#include <sstream>

namespace dnnreuse {

CsvTable::CsvTable(std::string source, std::vector<std::string> header, std::vector<CsvRow> rows)
    : source_(std::move(source)), header_(std::move(header)), rows_(std::move(rows)) {}

std::optional<std::size_t> CsvTable::find_column(std::string_view name) const {
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (header_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t CsvTable::column(std::string_view name) const {
  if (auto i = find_column(name)) return *i;
  throw InputError(source_ + ": missing column '" + std::string(name) + "'");
}

std::string CsvTable::where(const CsvRow& row) const {
  return source_ + ":" + std::to_string(row.line);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

namespace {

std::vector<std::string> split_line(std::string_view line, const std::string& where) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current.push_back(c);
      }
    } else if (c == '"' && trim(current).empty()) {
      current.clear();
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? current : trim(current));
      current.clear();
      was_quoted = false;
    } else {
      current.push_back(c);
    }
  }
  if (quoted) throw InputError(where + ": unterminated quoted field");
  fields.push_back(was_quoted ? current : trim(current));
  return fields;
}

}  // namespace

CsvTable parse_csv(std::string_view text, std::string source) {
  std::vector<std::string> header;
  std::vector<CsvRow> rows;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const auto where = source + ":" + std::to_string(line_no);
    auto fields = split_line(line, where);
    if (!have_header) {
      header = std::move(fields);
      have_header = true;
    } else {
      if (fields.size() != header.size()) {
        throw InputError(where + ": expected " + std::to_string(header.size()) +
                         " fields, found " + std::to_string(fields.size()));
      }
      rows.push_back({line_no, std::move(fields)});
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw InputError(source + ": empty CSV (no header row)");
  return CsvTable(std::move(source), std::move(header), std::move(rows));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CsvTable read_csv_file(const std::string& path) { return parse_csv(read_text_file(path), path); }

double parse_number(std::string_view field, std::string_view what) {
  const auto s = trim(field);
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc() || ptr != last) {
    throw InputError(std::string(what) + ": '" + s + "' is not a number");
  }
  return value;
}

long long parse_integer(std::string_view field, std::string_view what) {
  const auto s = trim(field);
  long long value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc() || ptr != last) {
    throw InputError(std::string(what) + ": '" + s + "' is not an integer");
  }
  return value;
}

}  // namespace dnnreuse
