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

#ifndef STTMREC_STTM_VITERBI_H_
#define STTMREC_STTM_VITERBI_H_

#include <vector>

#include "sttmrec/corpus/sequence.h"
#include "sttmrec/sttm/profiles.h"

namespace sttmrec::sttm {

struct DecodeResult {
  std::vector<int> path;
  double log_score = 0.0;
  // Maximum-likelihood topic mixture per time point given the path.
  Matrix topic_mixture;
};

// Log emission score of time point `step` under state `c`: document types
// through psi, words through the state's topic mixture. Tokens outside the
// profile vocabulary are skipped.
double EmissionLogScore(const StateProfiles& profiles,
                        const corpus::TimePoint& step, int c);

// Log score of a given state path (transitions plus emissions).
double PathLogScore(const StateProfiles& profiles, const corpus::Sequence& seq,
                    const std::vector<int>& path);

// Most probable state path. Among equally scored paths the one chosen is
// the smallest when compared from the last time point backwards (lower state
// index wins at each position). Throws InputError on an empty sequence or
// out-of-range document type / social category.
DecodeResult ViterbiDecode(const StateProfiles& profiles,
                           const corpus::Sequence& seq);

// EM estimate of the topic mixture maximizing the likelihood of `words`
// under `phi`, started from `start`. OOV words are skipped; with no words the
// start vector is returned unchanged.
std::vector<double> MaxLikelihoodMixture(const Matrix& phi,
                                         const std::vector<int>& words,
                                         std::vector<double> start,
                                         int max_iters = 200,
                                         double tol = 1e-10);

}  // namespace sttmrec::sttm

#endif  // STTMREC_STTM_VITERBI_H_
