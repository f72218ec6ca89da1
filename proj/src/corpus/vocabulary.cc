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

#include "sttmrec/corpus/vocabulary.h"

#include "sttmrec/common/error.h"

namespace sttmrec::corpus {

Vocabulary::Vocabulary(std::vector<std::string> words) {
  for (auto& w : words) {
    if (index_.count(w)) throw InputError("duplicate vocabulary word: " + w);
    index_.emplace(w, static_cast<int>(words_.size()));
    words_.push_back(std::move(w));
  }
}

int Vocabulary::Add(std::string_view word) {
  auto it = index_.find(std::string(word));
  if (it != index_.end()) return it->second;
  const int id = static_cast<int>(words_.size());
  words_.emplace_back(word);
  index_.emplace(words_.back(), id);
  return id;
}

std::optional<int> Vocabulary::Find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace sttmrec::corpus
