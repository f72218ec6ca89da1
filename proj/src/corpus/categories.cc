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

#include "sttmrec/corpus/categories.h"

#include <algorithm>

#include "sttmrec/common/error.h"

namespace sttmrec::corpus {

void GoalHistory::AddUser(const std::string& user) { entries_[user]; }

void GoalHistory::AddNote(const std::string& user, int week,
                          bool contains_goal) {
  Entry& e = entries_[user];
  e.first_note_week = std::min(e.first_note_week, week);
  if (contains_goal) e.first_goal_week = std::min(e.first_goal_week, week);
}

GoalCategory GoalHistory::CategoryAt(const std::string& user, int week) const {
  auto it = entries_.find(user);
  if (it == entries_.end()) throw InputError("unknown user: " + user);
  if (it->second.first_goal_week <= week) return GoalCategory::kSetter;
  if (it->second.first_note_week <= week) return GoalCategory::kParticipant;
  return GoalCategory::kBystander;
}

SocialCategory DeriveSocialCategory(std::span<const FollowEdge> user_edges,
                                    int week, const GoalHistory& goals) {
  int best = -1;
  int first_edge_week = INT_MAX;
  for (const auto& edge : user_edges) {
    if (edge.week_index > week) continue;
    const int tier = static_cast<int>(goals.CategoryAt(edge.followee, week));
    if (tier > best) {
      best = tier;
      first_edge_week = edge.week_index;
    } else if (tier == best) {
      first_edge_week = std::min(first_edge_week, edge.week_index);
    }
  }
  if (best < 0) return SocialCategory::kS7;
  const bool started = first_edge_week == week;
  // Setter -> S1/S2, participant -> S3/S4, bystander -> S5/S6.
  const int base = 2 * (static_cast<int>(GoalCategory::kSetter) - best);
  return static_cast<SocialCategory>(base + (started ? 1 : 0));
}

int ConnectionGroup(SocialCategory category) {
  return static_cast<int>(category) / 2;
}

}  // namespace sttmrec::corpus
