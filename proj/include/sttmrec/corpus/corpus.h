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

#ifndef STTMREC_CORPUS_CORPUS_H_
#define STTMREC_CORPUS_CORPUS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sttmrec/corpus/categories.h"
#include "sttmrec/corpus/sequence.h"
#include "sttmrec/corpus/tokenizer.h"
#include "sttmrec/corpus/types.h"
#include "sttmrec/corpus/vocabulary.h"

namespace sttmrec::corpus {

inline constexpr int64_t kSecondsPerWeek = 604800;

struct CorpusOptions {
  int64_t course_start = 0;  // UTC seconds of week 0
  std::vector<std::string> hashtags = DefaultCourseHashtags();
};

// Loaded and preprocessed discourse data. Immutable once built.
class Corpus {
 public:
  // Reads documents.jsonl, follows.csv and goal_labels.csv. Throws
  // InputError with file:line diagnostics on malformed input.
  static Corpus Load(const std::string& documents_path,
                     const std::string& follows_path,
                     const std::string& goal_labels_path,
                     const CorpusOptions& options);

  static Corpus Build(std::vector<RawDocument> documents,
                      std::vector<FollowEdge> follows,
                      std::vector<GoalLabel> labels,
                      const CorpusOptions& options);

  // Every user seen as an author or follow endpoint, sorted.
  const std::vector<std::string>& users() const { return users_; }
  // Non-empty processed documents, ordered by (timestamp, doc_id).
  const std::vector<ProcessedDocument>& documents() const { return documents_; }
  const std::vector<FollowEdge>& follows() const { return follows_; }
  const Vocabulary& vocabulary() const { return vocabulary_; }
  const GoalHistory& goals() const { return goals_; }
  // Source type of each processed document, parallel to documents().
  const std::vector<DocType>& source_types() const { return source_types_; }

  GoalCategory GoalCategoryAt(const std::string& user, int week) const {
    return goals_.CategoryAt(user, week);
  }
  SocialCategory SocialCategoryAt(const std::string& user, int week) const;

  // First week with any raw activity (document or follow), or 0.
  int FirstActiveWeek(const std::string& user) const;
  // Largest week index present in the data (documents or follows), or -1.
  int MaxWeek() const { return max_week_; }

 private:
  std::vector<std::string> users_;
  std::vector<ProcessedDocument> documents_;
  std::vector<DocType> source_types_;
  std::vector<FollowEdge> follows_;
  std::map<std::string, std::vector<FollowEdge>> outgoing_;
  std::map<std::string, int> first_active_week_;
  Vocabulary vocabulary_;
  GoalHistory goals_;
  int max_week_ = -1;
};

int WeekIndex(int64_t timestamp, int64_t course_start);

std::vector<RawDocument> ReadDocumentsJsonl(const std::string& path);
std::vector<FollowEdge> ReadFollowsCsv(const std::string& path);
std::vector<GoalLabel> ReadGoalLabelsCsv(const std::string& path);

// Groups each user's documents by week. Weeks without documents are
// omitted; users with no active week are left out.
SequenceSet BuildSequences(const Corpus& corpus);

}  // namespace sttmrec::corpus

#endif  // STTMREC_CORPUS_CORPUS_H_
