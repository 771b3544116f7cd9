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

#ifndef DNNREUSE_CSV_H_
#define DNNREUSE_CSV_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dnnreuse/error.h"

namespace dnnreuse {

// Minimal comma-separated reader. The first non-comment line is the header;
// lines starting with '#' and blank lines are skipped. Double-quoted fields
// may contain commas and doubled quotes. CR before LF is dropped.
struct CsvRow {
  std::size_t line = 0;  // 1-based line in the source text
  std::vector<std::string> fields;
};

class CsvTable {
 public:
  CsvTable() = default;
  CsvTable(std::string source, std::vector<std::string> header, std::vector<CsvRow> rows);

  const std::string& source() const { return source_; }
  const std::vector<std::string>& header() const { return header_; }
  const std::vector<CsvRow>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  std::optional<std::size_t> find_column(std::string_view name) const;
  // Throws InputError naming the source when the column is absent.
  std::size_t column(std::string_view name) const;

  // "<source>:<line>" for diagnostics.
  std::string where(const CsvRow& row) const;

 private:
  std::string source_;
  std::vector<std::string> header_;
  std::vector<CsvRow> rows_;
};

// Throws InputError when a row's field count differs from the header's.
CsvTable parse_csv(std::string_view text, std::string source = "<csv>");
CsvTable read_csv_file(const std::string& path);

std::string read_text_file(const std::string& path);

// Whole-field decimal parsing; throws InputError mentioning `what`.
double parse_number(std::string_view field, std::string_view what);
long long parse_integer(std::string_view field, std::string_view what);

std::string trim(std::string_view s);

}  // namespace dnnreuse

#endif  // DNNREUSE_CSV_H_
