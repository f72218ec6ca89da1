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

#ifndef STTMREC_STTM_HYPERPARAMS_H_
#define STTMREC_STTM_HYPERPARAMS_H_

#include "json.hpp"

namespace sttmrec::sttm {

struct Hyperparams {
  int num_states = 10;     // S
  int num_social = 7;      // A
  int num_topics = 20;     // Z
  int num_doc_types = 6;   // D
  double alpha = 0.1;      // state-topic concentration
  double beta = 0.01;      // topic-word concentration
  double nu = 0.1;         // state-doctype concentration
  double gamma = 0.1;      // transition concentration

  // Throws InputError if a count is < 1 or a concentration is not > 0.
  void Validate() const;
};

void to_json(nlohmann::json& j, const Hyperparams& h);
void from_json(const nlohmann::json& j, Hyperparams& h);

}  // namespace sttmrec::sttm

#endif  // STTMREC_STTM_HYPERPARAMS_H_
