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


#ifndef STTMREC_RECOMMENDER_METRICS_H_
#define STTMREC_RECOMMENDER_METRICS_H_

#include <functional>
#include <string>
#include <vector>

namespace sttmrec::recommender {

// Candidate indices ordered by score descending, ties by id ascending.
std::vector<int> RankCandidates(const std::vector<double>& scores,
                                const std::vector<std::string>& ids);

// Average precision of a ranked list of relevance flags; 0 when nothing is
// relevant.
double AveragePrecision(const std::vector<bool>& ranked_relevant);

// Expected average precision of a uniformly random ranking of n items of
// which k are relevant: (H_n + (k - 1) / (n - 1) * (n - H_n)) / n.
double RandomRankingExpectedAp(int n, int k);

// One evaluated user: candidate discussions and which of them are held-out
// positives.
struct UserCandidates {
  std::string user;
  std::vector<std::string> candidates;
  std::vector<bool> relevant;
};

struct MapReport {
  double map = 0.0;
  double random_expectation = 0.0;  // mean of RandomRankingExpectedAp
  int evaluated = 0;
  int skipped_empty = 0;        // users with no candidates
  int skipped_no_positive = 0;  // users with no held-out positive
};

// Scores every candidate with `score(user, discussion)`, ranks per user and
// averages AP over users that have candidates and at least one positive.
MapReport EvaluateMap(
    const std::vector<UserCandidates>& users,
    const std::function<double(const std::string&, const std::string&)>&
        score);

}  // namespace sttmrec::recommender

#endif  // STTMREC_RECOMMENDER_METRICS_H_
