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

#ifndef STTMREC_STTM_PROFILES_H_
#define STTMREC_STTM_PROFILES_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "sttmrec/sttm/counts.h"
#include "sttmrec/sttm/hyperparams.h"

namespace sttmrec::sttm {

using Matrix = std::vector<std::vector<double>>;

// Point estimates of every distribution in the model.
struct StateProfiles {
  Matrix phi;                   // [topic][word]
  Matrix theta;                 // [state][topic]
  Matrix psi;                   // [state][doc type]
  std::vector<Matrix> pi;       // [state][social][next state]
  Matrix init;                  // [social][state], from the start row
  std::vector<Matrix> theta_doc;  // [sequence][step][topic]
  std::vector<std::string> vocabulary;

  int num_states() const { return static_cast<int>(theta.size()); }
  int num_topics() const { return static_cast<int>(phi.size()); }
  int num_doc_types() const {
    return psi.empty() ? 0 : static_cast<int>(psi[0].size());
  }
  int num_social() const {
    return init.empty() ? 0 : static_cast<int>(init.size());
  }
  int vocab_size() const {
    return phi.empty() ? 0 : static_cast<int>(phi[0].size());
  }

  // Throws InputError unless every row is a distribution: entries in [0, 1]
  // and sums within `tol` of 1. Shapes must agree.
  void Validate(double tol = 1e-9) const;
};

// Smoothed estimators: each row is (count + concentration) normalized.
// `counts` may hold averaged (non-integer) snapshots. `steps_per_sequence`
// splits the flat per-time-point topic counts into theta_doc.
template <typename T>
StateProfiles EstimateProfiles(const CountTables<T>& counts,
                               const Hyperparams& h,
                               const std::vector<int>& steps_per_sequence,
                               const std::vector<std::string>& vocabulary);

void to_json(nlohmann::json& j, const StateProfiles& p);
void from_json(const nlohmann::json& j, StateProfiles& p);

}  // namespace sttmrec::sttm

#endif  // STTMREC_STTM_PROFILES_H_
