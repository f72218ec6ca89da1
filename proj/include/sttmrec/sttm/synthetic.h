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

#ifndef STTMREC_STTM_SYNTHETIC_H_
#define STTMREC_STTM_SYNTHETIC_H_

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "sttmrec/corpus/sequence.h"
#include "sttmrec/sttm/hyperparams.h"
#include "sttmrec/sttm/profiles.h"

namespace sttmrec::sttm {

struct SyntheticSpec {
  int num_sequences = 200;
  int length = 8;  // time points per sequence
  int min_docs = 2;
  int max_docs = 4;
  int min_tokens = 6;
  int max_tokens = 12;
  // Optional social schedule [sequence][step]. Empty means categories are
  // drawn uniformly per step.
  std::vector<std::vector<int>> social;
};

struct SyntheticTruth {
  StateProfiles profiles;
  std::vector<std::vector<int>> states;  // [sequence][step]
  std::vector<int> topics;               // flat (sequence, step, token)
};

struct SyntheticData {
  corpus::SequenceSet data;
  SyntheticTruth truth;
};

// Forward-samples the generative process: the first state from init of the
// first social category, later states from pi[previous state][previous
// social category]; each document type from psi, each word's topic from
// theta and the word from phi. `truth` must carry valid distributions and a
// vocabulary of the right size.
SyntheticData GenerateSynthetic(const StateProfiles& truth,
                                const SyntheticSpec& spec, uint64_t seed);

// Deterministic, well-separated truth. Each topic puts most of its mass on
// its own block of words. Topic j is used by state j % S and by the next
// state, with a weight ratio that differs between topics, so no two topics
// always co-occur in the same proportion. Each state prefers one document
// type, and transitions prefer a social-category-dependent successor.
StateProfiles WellSeparatedTruth(const Hyperparams& h, int vocab_size);

void to_json(nlohmann::json& j, const SyntheticSpec& s);
void from_json(const nlohmann::json& j, SyntheticSpec& s);
void to_json(nlohmann::json& j, const SyntheticTruth& t);
void from_json(const nlohmann::json& j, SyntheticTruth& t);

}  // namespace sttmrec::sttm

#endif  // STTMREC_STTM_SYNTHETIC_H_
