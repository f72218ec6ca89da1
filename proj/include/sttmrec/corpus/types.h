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

#ifndef STTMREC_CORPUS_TYPES_H_
#define STTMREC_CORPUS_TYPES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sttmrec::corpus {

// Source platform of a raw document.
enum class DocType { kGoalNote, kProsoloPost, kBlogPost, kTweet };

// The six document types seen by the model. Goal notes and tweets split on
// goal content and course relevance respectively.
enum class EffType {
  kRelGoalNote = 0,
  kIrGoalNote = 1,
  kPost = 2,
  kBlog = 3,
  kRelTweet = 4,
  kIrTweet = 5,
};
inline constexpr int kNumEffTypes = 6;

// Ordered so that the enum value is the goal-quality feature (0, 1, 2).
enum class GoalCategory { kBystander = 0, kParticipant = 1, kSetter = 2 };

// S1..S7, stored 0-based.
enum class SocialCategory { kS1 = 0, kS2, kS3, kS4, kS5, kS6, kS7 };
inline constexpr int kNumSocialCategories = 7;

struct RawDocument {
  std::string doc_id;
  std::string user_id;
  int64_t timestamp = 0;
  DocType doc_type = DocType::kTweet;
  std::string text;
};

struct ProcessedDocument {
  std::string doc_id;
  std::string user_id;
  int64_t timestamp = 0;
  int week_index = 0;
  EffType eff_type = EffType::kPost;
  std::vector<int> tokens;
};

struct FollowEdge {
  std::string follower;
  std::string followee;
  int week_index = 0;
};

struct GoalLabel {
  std::string doc_id;
  bool contains_goal = false;
};

std::string_view DocTypeName(DocType type);
std::optional<DocType> ParseDocType(std::string_view name);

std::string_view EffTypeName(EffType type);
std::optional<EffType> ParseEffType(std::string_view name);
const std::array<std::string_view, kNumEffTypes>& EffTypeNames();

// True if `eff` is a legal effective type for a document of source `raw`.
bool IsReachable(DocType raw, EffType eff);

std::string_view GoalCategoryName(GoalCategory category);

std::string SocialCategoryName(SocialCategory category);  // "S1".."S7"
std::optional<SocialCategory> ParseSocialCategory(std::string_view name);

}  // namespace sttmrec::corpus

#endif  // STTMREC_CORPUS_TYPES_H_
