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

#ifndef STTMREC_CORPUS_CATEGORIES_H_
#define STTMREC_CORPUS_CATEGORIES_H_

#include <climits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sttmrec/corpus/types.h"

namespace sttmrec::corpus {

// Per-user goal-note history. A user becomes a participant at the week of
// their first goal note and a setter at the week of their first note that
// contains a goal; neither ever reverts.
class GoalHistory {
 public:
  struct Entry {
    int first_note_week = INT_MAX;
    int first_goal_week = INT_MAX;
  };

  // Registers a user with no notes.
  void AddUser(const std::string& user);
  // Records one labelled goal note (registers the user if needed).
  void AddNote(const std::string& user, int week, bool contains_goal);

  bool HasUser(const std::string& user) const {
    return entries_.count(user) > 0;
  }

  // Throws InputError for users never registered.
  GoalCategory CategoryAt(const std::string& user, int week) const;

 private:
  std::map<std::string, Entry> entries_;
};

// Social connection category of a user at `week` given that user's outgoing
// follow edges. Only edges with week_index <= week count; each followee is
// ranked by its current goal category and the best tier decides the class.
// The class is "new" (S2/S4/S6) iff the earliest edge into the best tier was
// created exactly at `week`.
SocialCategory DeriveSocialCategory(std::span<const FollowEdge> user_edges,
                                    int week, const GoalHistory& goals);

// Maps S1..S7 onto the four occupancy groups GS, GP, GB, NO (0..3).
int ConnectionGroup(SocialCategory category);

}  // namespace sttmrec::corpus

#endif  // STTMREC_CORPUS_CATEGORIES_H_
