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


#ifndef STTMREC_RECOMMENDER_REC_DATA_H_
#define STTMREC_RECOMMENDER_REC_DATA_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sttmrec::recommender {

struct Discussion {
  std::string id;
  double n_replies = 0.0;
  double length = 0.0;  // content length in tokens
  std::vector<std::string> participants;  // first entry is the initiator
};

// discussions.jsonl: one {discussion_id, n_replies, length, participants[]}
// object per line. Throws InputError with path:line on bad records.
std::vector<Discussion> ReadDiscussionsJsonl(const std::string& path);
void WriteDiscussionsJsonl(std::ostream& out,
                           const std::vector<Discussion>& discussions);

using UserDiscussion = std::pair<std::string, std::string>;

// participation.csv with header user_id,discussion_id.
std::vector<UserDiscussion> ReadParticipationCsv(const std::string& path);
void WriteParticipationCsv(std::ostream& out,
                           const std::vector<UserDiscussion>& pairs);

// Per-user attributes computed outside the recommender.
struct UserAttributes {
  double goal_quality = 0.0;  // 0 bystander, 1 participant, 2 setter
  double centrality = 0.0;    // mean of HITS authority and hub
  int registration_week = 0;
};

// users.csv with header user_id,goal_quality,centrality,registration_week.
// Throws InputError with path:line on malformed or duplicate rows.
std::map<std::string, UserAttributes> ReadUserAttributesCsv(
    const std::string& path);
void WriteUserAttributesCsv(
    std::ostream& out, const std::map<std::string, UserAttributes>& users);

using IndexPair = std::pair<int, int>;  // (user, discussion)

// Dense index space over users and discussions. Users are the union of
// attribute keys, participants and participation rows, sorted; discussions
// keep file order.
struct RecDataset {
  std::vector<std::string> users;
  std::vector<std::string> discussions;
  std::vector<UserAttributes> attributes;  // per user
  std::vector<double> replies;             // per discussion
  std::vector<double> length;              // per discussion
  std::vector<int> initiator;              // per discussion, -1 if unknown
  std::vector<IndexPair> positives;        // sorted, unique

  int num_users() const { return static_cast<int>(users.size()); }
  int num_discussions() const { return static_cast<int>(discussions.size()); }
  // Throw InputError for unknown ids.
  int UserIndex(const std::string& id) const;
  int DiscussionIndex(const std::string& id) const;
};

// Throws InputError on duplicate discussion ids, negative features or
// participation rows naming an unknown discussion.
RecDataset BuildRecDataset(
    const std::vector<Discussion>& discussions,
    const std::vector<UserDiscussion>& participation,
    const std::map<std::string, UserAttributes>& attributes);

struct PositiveSplit {
  std::vector<IndexPair> train;
  std::vector<IndexPair> test;
};

// Per user, holds out floor(n * test_fraction) positives (at least one)
// when the user has two or more; single-positive users stay in training.
PositiveSplit SplitPerUser(const std::vector<IndexPair>& positives,
                           double test_fraction, uint64_t seed);

}  // namespace sttmrec::recommender

#endif  // STTMREC_RECOMMENDER_REC_DATA_H_
