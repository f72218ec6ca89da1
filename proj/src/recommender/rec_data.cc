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


#include "sttmrec/recommender/rec_data.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>

#include "json.hpp"
#include "sttmrec/common/csv.h"
#include "sttmrec/common/error.h"
#include "sttmrec/common/random.h"

namespace sttmrec::recommender {
namespace {

std::string Located(const std::string& path, int line, const std::string& what) {
  return path + ":" + std::to_string(line) + ": " + what;
}

double NonNegative(const nlohmann::json& obj, const char* key) {
  const double v = obj.at(key).get<double>();
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw InputError(std::string(key) + " must be a finite number >= 0");
  }
  return v;
}

}  // namespace

std::vector<Discussion> ReadDiscussionsJsonl(const std::string& path) {
  const std::string text = ReadFileOrThrow(path);
  std::vector<Discussion> out;
  size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    const std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto obj = nlohmann::json::parse(line);
      Discussion d;
      d.id = obj.at("discussion_id").get<std::string>();
      if (d.id.empty()) throw InputError("empty discussion_id");
      d.n_replies = NonNegative(obj, "n_replies");
      d.length = NonNegative(obj, "length");
      d.participants =
          obj.value("participants", std::vector<std::string>{});
      out.push_back(std::move(d));
    } catch (const InputError& e) {
      throw InputError(Located(path, line_no, e.what()));
    } catch (const nlohmann::json::exception& e) {
      throw InputError(Located(path, line_no, e.what()));
    }
  }
  return out;
}

void WriteDiscussionsJsonl(std::ostream& out,
                           const std::vector<Discussion>& discussions) {
  for (const auto& d : discussions) {
    nlohmann::ordered_json obj;
    obj["discussion_id"] = d.id;
    obj["n_replies"] = d.n_replies;
    obj["length"] = d.length;
    obj["participants"] = d.participants;
    out << obj.dump() << "\n";
  }
}

std::vector<UserDiscussion> ReadParticipationCsv(const std::string& path) {
  std::vector<UserDiscussion> out;
  for (const auto& row : ReadCsvFile(path, {"user_id", "discussion_id"})) {
    if (row.fields[0].empty() || row.fields[1].empty()) {
      throw InputError(Located(path, row.line, "empty id"));
    }
    out.emplace_back(row.fields[0], row.fields[1]);
  }
  return out;
}

void WriteParticipationCsv(std::ostream& out,
                           const std::vector<UserDiscussion>& pairs) {
  WriteCsvRow(out, {"user_id", "discussion_id"});
  for (const auto& [u, d] : pairs) WriteCsvRow(out, {u, d});
}

std::map<std::string, UserAttributes> ReadUserAttributesCsv(
    const std::string& path) {
  std::map<std::string, UserAttributes> out;
  for (const auto& row :
       ReadCsvFile(path, {"user_id", "goal_quality", "centrality",
                          "registration_week"})) {
    UserAttributes a;
    try {
      size_t used = 0;
      a.goal_quality = std::stod(row.fields[1], &used);
      if (used != row.fields[1].size()) throw std::invalid_argument("");
      a.centrality = std::stod(row.fields[2], &used);
      if (used != row.fields[2].size()) throw std::invalid_argument("");
      a.registration_week = std::stoi(row.fields[3], &used);
      if (used != row.fields[3].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw InputError(Located(path, row.line, "malformed number"));
    }
    if (a.goal_quality != 0.0 && a.goal_quality != 1.0 &&
        a.goal_quality != 2.0) {
      throw InputError(Located(path, row.line, "goal_quality must be 0, 1 or 2"));
    }
    if (!(a.centrality >= 0.0 && a.centrality <= 1.0) ||
        a.registration_week < 0) {
      throw InputError(Located(path, row.line, "attribute out of range"));
    }
    if (row.fields[0].empty() || !out.emplace(row.fields[0], a).second) {
      throw InputError(
          Located(path, row.line, "empty or duplicate user " + row.fields[0]));
    }
  }
  return out;
}

void WriteUserAttributesCsv(
    std::ostream& out, const std::map<std::string, UserAttributes>& users) {
  WriteCsvRow(out, {"user_id", "goal_quality", "centrality",
                    "registration_week"});
  char buf[64];
  for (const auto& [id, a] : users) {
    std::snprintf(buf, sizeof buf, "%.17g", a.centrality);
    WriteCsvRow(out, {id, std::to_string(static_cast<int>(a.goal_quality)),
                      buf, std::to_string(a.registration_week)});
  }
}

int RecDataset::UserIndex(const std::string& id) const {
  auto it = std::lower_bound(users.begin(), users.end(), id);
  if (it == users.end() || *it != id) throw InputError("unknown user " + id);
  return static_cast<int>(it - users.begin());
}

int RecDataset::DiscussionIndex(const std::string& id) const {
  auto it = std::find(discussions.begin(), discussions.end(), id);
  if (it == discussions.end()) throw InputError("unknown discussion " + id);
  return static_cast<int>(it - discussions.begin());
}

RecDataset BuildRecDataset(
    const std::vector<Discussion>& discussions,
    const std::vector<UserDiscussion>& participation,
    const std::map<std::string, UserAttributes>& attributes) {
  RecDataset data;
  std::map<std::string, int> disc_index;
  std::set<std::string> users;
  for (const auto& [id, attr] : attributes) users.insert(id);
  for (const auto& d : discussions) {
    if (!disc_index.emplace(d.id, static_cast<int>(data.discussions.size()))
             .second) {
      throw InputError("duplicate discussion_id " + d.id);
    }
    if (d.n_replies < 0 || d.length < 0) {
      throw InputError("discussion " + d.id + " has negative features");
    }
    data.discussions.push_back(d.id);
    data.replies.push_back(d.n_replies);
    data.length.push_back(d.length);
    users.insert(d.participants.begin(), d.participants.end());
  }
  for (const auto& [u, d] : participation) users.insert(u);
  data.users.assign(users.begin(), users.end());
  for (const auto& u : data.users) {
    auto it = attributes.find(u);
    data.attributes.push_back(it == attributes.end() ? UserAttributes{}
                                                     : it->second);
  }
  for (const auto& d : discussions) {
    data.initiator.push_back(
        d.participants.empty() ? -1 : data.UserIndex(d.participants.front()));
  }
  std::set<IndexPair> positives;
  for (const auto& [u, d] : participation) {
    auto it = disc_index.find(d);
    if (it == disc_index.end()) {
      throw InputError("participation names unknown discussion " + d);
    }
    positives.emplace(data.UserIndex(u), it->second);
  }
  data.positives.assign(positives.begin(), positives.end());
  return data;
}

PositiveSplit SplitPerUser(const std::vector<IndexPair>& positives,
                           double test_fraction, uint64_t seed) {
  if (!(test_fraction >= 0.0 && test_fraction < 1.0)) {
    throw InputError("split: test fraction must be in [0, 1)");
  }
  std::map<int, std::vector<int>> by_user;
  for (const auto& [u, d] : positives) by_user[u].push_back(d);
  Rng rng(seed);
  PositiveSplit split;
  for (auto& [u, items] : by_user) {
    std::sort(items.begin(), items.end());
    rng.Shuffle(items.begin(), items.end());
    size_t held = 0;
    if (items.size() >= 2 && test_fraction > 0.0) {
      held = std::max<size_t>(
          1, static_cast<size_t>(std::floor(items.size() * test_fraction)));
    }
    for (size_t i = 0; i < items.size(); ++i) {
      (i < held ? split.test : split.train).emplace_back(u, items[i]);
    }
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

}  // namespace sttmrec::recommender
