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

#ifndef STTMREC_CORPUS_SEQUENCE_H_
#define STTMREC_CORPUS_SEQUENCE_H_

#include <string>
#include <vector>

#include "json.hpp"

namespace sttmrec::corpus {

// Model input: one sequence of active weeks per user.

struct SeqDocument {
  int type = 0;             // effective document type
  std::vector<int> tokens;  // vocabulary indices
};

struct TimePoint {
  int week = 0;
  int social = 0;  // social category index (S1 = 0)
  std::vector<SeqDocument> docs;
};

struct Sequence {
  std::string user_id;
  std::vector<TimePoint> steps;
};

struct SequenceSet {
  std::vector<Sequence> sequences;
  std::vector<std::string> vocabulary;
  int num_doc_types = 6;
  int num_social = 7;

  size_t NumTimePoints() const;
  size_t NumTokens() const;
};

void to_json(nlohmann::json& j, const SequenceSet& set);
void from_json(const nlohmann::json& j, SequenceSet& set);

// Throws InputError if any index is out of range.
void ValidateSequenceSet(const SequenceSet& set);

}  // namespace sttmrec::corpus

#endif  // STTMREC_CORPUS_SEQUENCE_H_
