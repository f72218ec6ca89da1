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

#ifndef STTMREC_COMMON_CSV_H_
#define STTMREC_COMMON_CSV_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sttmrec {

struct CsvRow {
  int line = 0;  // 1-based line number of the row's first physical line
  std::vector<std::string> fields;
};

// RFC 4180 reader. Quoted fields may contain commas, doubled quotes and
// newlines. Blank lines are skipped. Throws InputError naming `source` and
// the line on an unterminated quote.
std::vector<CsvRow> ParseCsv(std::string_view text, std::string_view source);

// Reads a CSV file whose first row must equal `header` exactly.
std::vector<CsvRow> ReadCsvFile(const std::string& path,
                                const std::vector<std::string>& header);

std::string CsvQuote(std::string_view field);

// Writes one record with RFC 4180 quoting and CRLF-free "\n" terminator.
void WriteCsvRow(std::ostream& out, const std::vector<std::string>& fields);

// Reads a whole file; throws InputError naming the path if unreadable.
std::string ReadFileOrThrow(const std::string& path);

}  // namespace sttmrec

#endif  // STTMREC_COMMON_CSV_H_
