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


#include "sttmrec/recommender/metrics.h"

#include <algorithm>
#include <numeric>

#include "sttmrec/common/error.h"

namespace sttmrec::recommender {

std::vector<int> RankCandidates(const std::vector<double>& scores,
                                const std::vector<std::string>& ids) {
  if (scores.size() != ids.size()) {
    throw InputError("rank: scores and ids differ in length");
  }
  std::vector<int> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return ids[a] < ids[b];
  });
  return order;
}

double AveragePrecision(const std::vector<bool>& ranked_relevant) {
  int hits = 0;
  double sum = 0.0;
  for (size_t i = 0; i < ranked_relevant.size(); ++i) {
    if (!ranked_relevant[i]) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(i + 1);
  }
  return hits == 0 ? 0.0 : sum / hits;
}

double RandomRankingExpectedAp(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw InputError("expected AP: need 1 <= k <= n");
  }
  double harmonic = 0.0;
  for (int i = 1; i <= n; ++i) harmonic += 1.0 / i;
  if (n == 1) return 1.0;
  return (harmonic + static_cast<double>(k - 1) / (n - 1) * (n - harmonic)) /
         n;
}

MapReport EvaluateMap(
    const std::vector<UserCandidates>& users,
    const std::function<double(const std::string&, const std::string&)>&
        score) {
  MapReport report;
  double ap_sum = 0.0;
  double random_sum = 0.0;
  for (const auto& u : users) {
    if (u.candidates.size() != u.relevant.size()) {
      throw InputError("map: candidate and relevance lists differ for " +
                       u.user);
    }
    if (u.candidates.empty()) {
      ++report.skipped_empty;
      continue;
    }
    const int positives =
        static_cast<int>(std::count(u.relevant.begin(), u.relevant.end(), true));
    if (positives == 0) {
      ++report.skipped_no_positive;
      continue;
    }
    std::vector<double> scores;
    for (const auto& d : u.candidates) scores.push_back(score(u.user, d));
    std::vector<bool> ranked;
    for (int i : RankCandidates(scores, u.candidates)) {
      ranked.push_back(u.relevant[i]);
    }
    ap_sum += AveragePrecision(ranked);
    random_sum += RandomRankingExpectedAp(
        static_cast<int>(u.candidates.size()), positives);
    ++report.evaluated;
  }
  if (report.evaluated > 0) {
    report.map = ap_sum / report.evaluated;
    report.random_expectation = random_sum / report.evaluated;
  }
  return report;
}

}  // namespace sttmrec::recommender
