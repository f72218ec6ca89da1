/*
 * Copyright 2026 The sttmrec Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "sttmrec/common/csv.h"

#include <fstream>
#include <sstream>

#include "sttmrec/common/error.h"

namespace sttmrec {

std::vector<CsvRow> ParseCsv(std::string_view text, std::string_view source) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  int line = 1;
  row.line = 1;

  auto end_field = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    const bool blank = row.fields.size() == 1 && row.fields[0].empty();
    if (!blank) rows.push_back(std::move(row));
    row = CsvRow{};
  };

  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started || !field.empty()) {
          throw InputError(std::string(source) + ":" + std::to_string(line) +
                           ": stray quote inside unquoted field");
        }
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        ++line;
        row.line = line;
        break;
      default:
        field.push_back(c);
        field_started = true;
    }
  }
  if (in_quotes) {
    throw InputError(std::string(source) + ":" + std::to_string(row.line) +
                     ": unterminated quoted field");
  }
  if (field_started || !field.empty() || !row.fields.empty()) end_row();
  return rows;
}

std::string ReadFileOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<CsvRow> ReadCsvFile(const std::string& path,
                                const std::vector<std::string>& header) {
  auto rows = ParseCsv(ReadFileOrThrow(path), path);
  if (rows.empty() || rows.front().fields != header) {
    std::string expected;
    for (size_t i = 0; i < header.size(); ++i) {
      if (i) expected += ',';
      expected += header[i];
    }
    throw InputError(path + ":1: expected header row '" + expected + "'");
  }
  rows.erase(rows.begin());
  for (const auto& row : rows) {
    if (row.fields.size() != header.size()) {
      throw InputError(path + ":" + std::to_string(row.line) + ": expected " +
                       std::to_string(header.size()) + " fields, got " +
                       std::to_string(row.fields.size()));
    }
  }
  return rows;
}

std::string CsvQuote(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void WriteCsvRow(std::ostream& out, const std::vector<std::string>& fields) {
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << CsvQuote(fields[i]);
  }
  out << '\n';
}

}  // namespace sttmrec
