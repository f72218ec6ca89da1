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

#include "sttmrec/common/error.h"
#include "sttmrec/corpus/sequence.h"

namespace sttmrec::corpus {

size_t SequenceSet::NumTimePoints() const {
  size_t n = 0;
  for (const auto& s : sequences) n += s.steps.size();
  return n;
}

size_t SequenceSet::NumTokens() const {
  size_t n = 0;
  for (const auto& s : sequences) {
    for (const auto& t : s.steps) {
      for (const auto& d : t.docs) n += d.tokens.size();
    }
  }
  return n;
}

void to_json(nlohmann::json& j, const SequenceSet& set) {
  nlohmann::json seqs = nlohmann::json::array();
  for (const auto& s : set.sequences) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& t : s.steps) {
      nlohmann::json docs = nlohmann::json::array();
      for (const auto& d : t.docs) {
        docs.push_back({{"type", d.type}, {"tokens", d.tokens}});
      }
      steps.push_back(
          {{"week", t.week}, {"social", t.social}, {"docs", std::move(docs)}});
    }
    seqs.push_back({{"user_id", s.user_id}, {"steps", std::move(steps)}});
  }
  j = {{"num_doc_types", set.num_doc_types},
       {"num_social", set.num_social},
       {"vocabulary", set.vocabulary},
       {"sequences", std::move(seqs)}};
}

void from_json(const nlohmann::json& j, SequenceSet& set) {
  set = SequenceSet{};
  set.num_doc_types = j.at("num_doc_types").get<int>();
  set.num_social = j.at("num_social").get<int>();
  set.vocabulary = j.at("vocabulary").get<std::vector<std::string>>();
  for (const auto& js : j.at("sequences")) {
    Sequence s;
    s.user_id = js.at("user_id").get<std::string>();
    for (const auto& jt : js.at("steps")) {
      TimePoint t;
      t.week = jt.at("week").get<int>();
      t.social = jt.at("social").get<int>();
      for (const auto& jd : jt.at("docs")) {
        t.docs.push_back({jd.at("type").get<int>(),
                          jd.at("tokens").get<std::vector<int>>()});
      }
      s.steps.push_back(std::move(t));
    }
    set.sequences.push_back(std::move(s));
  }
}

void ValidateSequenceSet(const SequenceSet& set) {
  const int v = static_cast<int>(set.vocabulary.size());
  for (const auto& s : set.sequences) {
    if (s.steps.empty()) {
      throw InputError("sequence for user " + s.user_id + " has no steps");
    }
    for (const auto& t : s.steps) {
      if (t.social < 0 || t.social >= set.num_social) {
        throw InputError("social category out of range in sequence " +
                         s.user_id);
      }
      for (const auto& d : t.docs) {
        if (d.type < 0 || d.type >= set.num_doc_types) {
          throw InputError("document type out of range in sequence " +
                           s.user_id);
        }
        for (int w : d.tokens) {
          if (w < 0 || w >= v) {
            throw InputError("token index out of range in sequence " +
                             s.user_id);
          }
        }
      }
    }
  }
}

}  // namespace sttmrec::corpus
