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

#include "sttmrec/corpus/corpus.h"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "sttmrec/common/csv.h"
#include "sttmrec/common/error.h"
#include "sttmrec/corpus/tokenizer.h"

namespace sttmrec::corpus {
namespace {

std::string Located(const std::string& path, int line, const std::string& m) {
  return path + ":" + std::to_string(line) + ": " + m;
}

// Accepts string or integer ids.
std::string IdField(const nlohmann::json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<int64_t>());
  throw InputError(std::string("field '") + key + "' must be a string or integer");
}

int ParseInt(const std::string& s, const std::string& path, int line,
             const char* what) {
  size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw InputError(Located(path, line, std::string("bad ") + what + ": '" +
                                             s + "'"));
  }
  return static_cast<int>(value);
}

}  // namespace

int WeekIndex(int64_t timestamp, int64_t course_start) {
  const int64_t delta = timestamp - course_start;
  // Floor division.
  int64_t week = delta / kSecondsPerWeek;
  if (delta % kSecondsPerWeek != 0 && delta < 0) --week;
  return static_cast<int>(week);
}

std::vector<RawDocument> ReadDocumentsJsonl(const std::string& path) {
  const std::string text = ReadFileOrThrow(path);
  std::vector<RawDocument> docs;
  size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string_view line(text.data() + pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      const auto obj = nlohmann::json::parse(line);
      RawDocument doc;
      doc.doc_id = IdField(obj, "doc_id");
      doc.user_id = IdField(obj, "user_id");
      doc.timestamp = obj.at("timestamp").get<int64_t>();
      const auto type_name = obj.at("doc_type").get<std::string>();
      const auto type = ParseDocType(type_name);
      if (!type) throw InputError("unknown doc_type '" + type_name + "'");
      doc.doc_type = *type;
      doc.text = obj.at("text").get<std::string>();
      if (doc.timestamp < 0) throw InputError("negative timestamp");
      docs.push_back(std::move(doc));
    } catch (const InputError& e) {
      throw InputError(Located(path, line_no, e.what()));
    } catch (const nlohmann::json::exception& e) {
      throw InputError(Located(path, line_no, e.what()));
    }
  }
  return docs;
}

std::vector<FollowEdge> ReadFollowsCsv(const std::string& path) {
  std::vector<FollowEdge> edges;
  for (const auto& row :
       ReadCsvFile(path, {"follower", "followee", "week_index"})) {
    FollowEdge e{row.fields[0], row.fields[1],
                 ParseInt(row.fields[2], path, row.line, "week_index")};
    if (e.week_index < 0) {
      throw InputError(Located(path, row.line, "negative week_index"));
    }
    if (e.follower == e.followee) {
      throw InputError(Located(path, row.line, "self-follow " + e.follower));
    }
    edges.push_back(std::move(e));
  }
  return edges;
}

std::vector<GoalLabel> ReadGoalLabelsCsv(const std::string& path) {
  std::vector<GoalLabel> labels;
  for (const auto& row : ReadCsvFile(path, {"doc_id", "contains_goal"})) {
    std::string v = row.fields[1];
    std::transform(v.begin(), v.end(), v.begin(), ::tolower);
    bool goal;
    if (v == "1" || v == "true" || v == "yes") {
      goal = true;
    } else if (v == "0" || v == "false" || v == "no") {
      goal = false;
    } else {
      throw InputError(Located(path, row.line,
                               "contains_goal must be true/false or 1/0"));
    }
    labels.push_back({row.fields[0], goal});
  }
  return labels;
}

Corpus Corpus::Load(const std::string& documents_path,
                    const std::string& follows_path,
                    const std::string& goal_labels_path,
                    const CorpusOptions& options) {
  return Build(ReadDocumentsJsonl(documents_path), ReadFollowsCsv(follows_path),
               ReadGoalLabelsCsv(goal_labels_path), options);
}

Corpus Corpus::Build(std::vector<RawDocument> documents,
                     std::vector<FollowEdge> follows,
                     std::vector<GoalLabel> labels,
                     const CorpusOptions& options) {
  Corpus c;
  std::set<std::string> users;

  std::unordered_set<std::string> doc_ids;
  std::unordered_map<std::string, DocType> doc_types;
  for (const auto& d : documents) {
    if (!doc_ids.insert(d.doc_id).second) {
      throw InputError("duplicate doc_id: " + d.doc_id);
    }
    if (d.timestamp < options.course_start) {
      throw InputError("document " + d.doc_id +
                       " predates course_start (week index would be < 0)");
    }
    doc_types.emplace(d.doc_id, d.doc_type);
    users.insert(d.user_id);
  }

  std::unordered_map<std::string, bool> goal_of;
  for (const auto& l : labels) {
    auto it = doc_types.find(l.doc_id);
    if (it == doc_types.end()) {
      throw InputError("goal label references unknown document " + l.doc_id);
    }
    if (it->second != DocType::kGoalNote) {
      throw InputError("goal label references non-GoalNote document " +
                       l.doc_id);
    }
    if (!goal_of.emplace(l.doc_id, l.contains_goal).second) {
      throw InputError("duplicate goal label for document " + l.doc_id);
    }
  }

  std::set<std::pair<std::string, std::string>> seen_edges;
  for (const auto& e : follows) {
    if (e.follower == e.followee) {
      throw InputError("self-follow edge for user " + e.follower);
    }
    if (e.week_index < 0) {
      throw InputError("negative follow week for " + e.follower);
    }
    if (!seen_edges.insert({e.follower, e.followee}).second) {
      throw InputError("duplicate follow edge " + e.follower + " -> " +
                       e.followee);
    }
    users.insert(e.follower);
    users.insert(e.followee);
  }

  c.users_.assign(users.begin(), users.end());
  for (const auto& u : c.users_) c.goals_.AddUser(u);

  std::stable_sort(documents.begin(), documents.end(),
                   [](const RawDocument& a, const RawDocument& b) {
                     if (a.timestamp != b.timestamp) {
                       return a.timestamp < b.timestamp;
                     }
                     return a.doc_id < b.doc_id;
                   });

  const int irrelevant_id = c.vocabulary_.Add(kIrrelevantToken);
  (void)irrelevant_id;
  auto note_activity = [&c](const std::string& user, int week) {
    auto [it, inserted] = c.first_active_week_.emplace(user, week);
    if (!inserted) it->second = std::min(it->second, week);
    c.max_week_ = std::max(c.max_week_, week);
  };

  for (const auto& d : documents) {
    const int week = WeekIndex(d.timestamp, options.course_start);
    note_activity(d.user_id, week);
    ProcessedDocument p;
    p.doc_id = d.doc_id;
    p.user_id = d.user_id;
    p.timestamp = d.timestamp;
    p.week_index = week;
    switch (d.doc_type) {
      case DocType::kGoalNote: {
        auto it = goal_of.find(d.doc_id);
        if (it == goal_of.end()) {
          throw InputError("goal note " + d.doc_id + " has no goal label");
        }
        c.goals_.AddNote(d.user_id, week, it->second);
        p.eff_type = it->second ? EffType::kRelGoalNote : EffType::kIrGoalNote;
        break;
      }
      case DocType::kProsoloPost:
        p.eff_type = EffType::kPost;
        break;
      case DocType::kBlogPost:
        p.eff_type = EffType::kBlog;
        break;
      case DocType::kTweet:
        p.eff_type = ClassifyTweetRelevance(d.text, options.hashtags) ==
                             TweetRelevance::kRelevant
                         ? EffType::kRelTweet
                         : EffType::kIrTweet;
        break;
    }
    if (p.eff_type == EffType::kIrTweet) {
      p.tokens = {c.vocabulary_.Add(kIrrelevantToken)};
    } else {
      for (const auto& tok : Tokenize(d.text, d.doc_type)) {
        p.tokens.push_back(c.vocabulary_.Add(tok));
      }
    }
    if (p.tokens.empty()) continue;
    c.documents_.push_back(std::move(p));
    c.source_types_.push_back(d.doc_type);
  }

  std::sort(follows.begin(), follows.end(),
            [](const FollowEdge& a, const FollowEdge& b) {
              return std::tie(a.follower, a.week_index, a.followee) <
                     std::tie(b.follower, b.week_index, b.followee);
            });
  for (const auto& e : follows) {
    c.outgoing_[e.follower].push_back(e);
    note_activity(e.follower, e.week_index);
  }
  c.follows_ = std::move(follows);
  return c;
}

SocialCategory Corpus::SocialCategoryAt(const std::string& user,
                                        int week) const {
  if (!goals_.HasUser(user)) throw InputError("unknown user: " + user);
  auto it = outgoing_.find(user);
  if (it == outgoing_.end()) return SocialCategory::kS7;
  return DeriveSocialCategory(it->second, week, goals_);
}

int Corpus::FirstActiveWeek(const std::string& user) const {
  auto it = first_active_week_.find(user);
  return it == first_active_week_.end() ? 0 : it->second;
}

SequenceSet BuildSequences(const Corpus& corpus) {
  SequenceSet set;
  set.vocabulary = corpus.vocabulary().words();
  set.num_doc_types = kNumEffTypes;
  set.num_social = kNumSocialCategories;

  // user -> week -> docs, both ordered.
  std::map<std::string, std::map<int, std::vector<SeqDocument>>> grouped;
  for (const auto& d : corpus.documents()) {
    grouped[d.user_id][d.week_index].push_back(
        {static_cast<int>(d.eff_type), d.tokens});
  }
  for (auto& [user, weeks] : grouped) {
    Sequence seq;
    seq.user_id = user;
    for (auto& [week, docs] : weeks) {
      TimePoint t;
      t.week = week;
      t.social = static_cast<int>(corpus.SocialCategoryAt(user, week));
      t.docs = std::move(docs);
      seq.steps.push_back(std::move(t));
    }
    set.sequences.push_back(std::move(seq));
  }
  return set;
}

}  // namespace sttmrec::corpus
