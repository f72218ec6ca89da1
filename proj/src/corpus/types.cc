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

#include "sttmrec/corpus/types.h"

namespace sttmrec::corpus {
namespace {

constexpr std::array<std::string_view, 4> kDocTypeNames = {
    "GoalNote", "ProsoloPost", "BlogPost", "Tweet"};

constexpr std::array<std::string_view, kNumEffTypes> kEffTypeNames = {
    "RelGoalNote", "IrGoalNote", "Post", "Blog", "RelTweet", "IrTweet"};

}  // namespace

std::string_view DocTypeName(DocType type) {
  return kDocTypeNames[static_cast<int>(type)];
}

std::optional<DocType> ParseDocType(std::string_view name) {
  for (size_t i = 0; i < kDocTypeNames.size(); ++i) {
    if (kDocTypeNames[i] == name) return static_cast<DocType>(i);
  }
  return std::nullopt;
}

std::string_view EffTypeName(EffType type) {
  return kEffTypeNames[static_cast<int>(type)];
}

std::optional<EffType> ParseEffType(std::string_view name) {
  for (size_t i = 0; i < kEffTypeNames.size(); ++i) {
    if (kEffTypeNames[i] == name) return static_cast<EffType>(i);
  }
  return std::nullopt;
}

const std::array<std::string_view, kNumEffTypes>& EffTypeNames() {
  return kEffTypeNames;
}

bool IsReachable(DocType raw, EffType eff) {
  switch (raw) {
    case DocType::kGoalNote:
      return eff == EffType::kRelGoalNote || eff == EffType::kIrGoalNote;
    case DocType::kProsoloPost:
      return eff == EffType::kPost;
    case DocType::kBlogPost:
      return eff == EffType::kBlog;
    case DocType::kTweet:
      return eff == EffType::kRelTweet || eff == EffType::kIrTweet;
  }
  return false;
}

std::string_view GoalCategoryName(GoalCategory category) {
  switch (category) {
    case GoalCategory::kBystander:
      return "GoalBystander";
    case GoalCategory::kParticipant:
      return "GoalParticipant";
    case GoalCategory::kSetter:
      return "GoalSetter";
  }
  return "?";
}

std::string SocialCategoryName(SocialCategory category) {
  return "S" + std::to_string(static_cast<int>(category) + 1);
}

std::optional<SocialCategory> ParseSocialCategory(std::string_view name) {
  if (name.size() == 2 && (name[0] == 'S' || name[0] == 's') &&
      name[1] >= '1' && name[1] <= '7') {
    return static_cast<SocialCategory>(name[1] - '1');
  }
  return std::nullopt;
}

}  // namespace sttmrec::corpus
