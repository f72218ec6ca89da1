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

#include "sttmrec/sttm/viterbi.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sttmrec/common/error.h"

namespace sttmrec::sttm {
namespace {

void CheckStep(const StateProfiles& profiles, const corpus::TimePoint& step) {
  if (step.social < 0 || step.social >= profiles.num_social()) {
    throw InputError("social category " + std::to_string(step.social) +
                     " outside the profile range");
  }
  for (const auto& doc : step.docs) {
    if (doc.type < 0 || doc.type >= profiles.num_doc_types()) {
      throw InputError("document type " + std::to_string(doc.type) +
                       " outside the profile range");
    }
  }
}

double TransitionLogProb(const StateProfiles& profiles,
                         const corpus::Sequence& seq, int t, int prev,
                         int c) {
  if (t == 0) return std::log(profiles.init[seq.steps[0].social][c]);
  return std::log(profiles.pi[prev][seq.steps[t - 1].social][c]);
}

}  // namespace

double EmissionLogScore(const StateProfiles& profiles,
                        const corpus::TimePoint& step, int c) {
  const int Z = profiles.num_topics();
  const int V = profiles.vocab_size();
  double score = 0.0;
  for (const auto& doc : step.docs) {
    score += std::log(profiles.psi[c][doc.type]);
    for (int w : doc.tokens) {
      if (w < 0 || w >= V) continue;
      double p = 0.0;
      for (int j = 0; j < Z; ++j) p += profiles.theta[c][j] * profiles.phi[j][w];
      score += std::log(p);
    }
  }
  return score;
}

double PathLogScore(const StateProfiles& profiles, const corpus::Sequence& seq,
                    const std::vector<int>& path) {
  if (path.size() != seq.steps.size()) {
    throw InputError("path length differs from sequence length");
  }
  double score = 0.0;
  for (size_t t = 0; t < path.size(); ++t) {
    CheckStep(profiles, seq.steps[t]);
    const int prev = t == 0 ? -1 : path[t - 1];
    score += TransitionLogProb(profiles, seq, static_cast<int>(t), prev,
                               path[t]);
    score += EmissionLogScore(profiles, seq.steps[t], path[t]);
  }
  return score;
}

DecodeResult ViterbiDecode(const StateProfiles& profiles,
                           const corpus::Sequence& seq) {
  const int T = static_cast<int>(seq.steps.size());
  const int S = profiles.num_states();
  if (T == 0) throw InputError("cannot decode an empty sequence");
  if (S == 0) throw InputError("profiles have no states");
  for (const auto& step : seq.steps) CheckStep(profiles, step);

  std::vector<std::vector<double>> delta(T, std::vector<double>(S));
  std::vector<std::vector<int>> back(T, std::vector<int>(S, -1));
  for (int c = 0; c < S; ++c) {
    delta[0][c] = TransitionLogProb(profiles, seq, 0, -1, c) +
                  EmissionLogScore(profiles, seq.steps[0], c);
  }
  for (int t = 1; t < T; ++t) {
    for (int c = 0; c < S; ++c) {
      double best = -std::numeric_limits<double>::infinity();
      int arg = 0;
      for (int p = 0; p < S; ++p) {
        const double v =
            delta[t - 1][p] + TransitionLogProb(profiles, seq, t, p, c);
        if (v > best) {
          best = v;
          arg = p;
        }
      }
      delta[t][c] = best + EmissionLogScore(profiles, seq.steps[t], c);
      back[t][c] = arg;
    }
  }

  DecodeResult result;
  result.path.assign(T, 0);
  int last = 0;
  for (int c = 1; c < S; ++c) {
    if (delta[T - 1][c] > delta[T - 1][last]) last = c;
  }
  result.log_score = delta[T - 1][last];
  result.path[T - 1] = last;
  for (int t = T - 1; t > 0; --t) result.path[t - 1] = back[t][result.path[t]];

  for (int t = 0; t < T; ++t) {
    std::vector<int> words;
    for (const auto& doc : seq.steps[t].docs) {
      words.insert(words.end(), doc.tokens.begin(), doc.tokens.end());
    }
    result.topic_mixture.push_back(MaxLikelihoodMixture(
        profiles.phi, words, profiles.theta[result.path[t]]));
  }
  return result;
}

std::vector<double> MaxLikelihoodMixture(const Matrix& phi,
                                         const std::vector<int>& words,
                                         std::vector<double> start,
                                         int max_iters, double tol) {
  const int Z = static_cast<int>(phi.size());
  const int V = Z == 0 ? 0 : static_cast<int>(phi[0].size());
  std::vector<int> known;
  for (int w : words) {
    if (w >= 0 && w < V) known.push_back(w);
  }
  if (known.empty() || Z == 0) return start;

  std::vector<double> mix = std::move(start);
  std::vector<double> next(Z);
  std::vector<double> resp(Z);
  for (int iter = 0; iter < max_iters; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    for (int w : known) {
      double norm = 0.0;
      for (int j = 0; j < Z; ++j) {
        resp[j] = mix[j] * phi[j][w];
        norm += resp[j];
      }
      if (norm <= 0.0) continue;
      for (int j = 0; j < Z; ++j) next[j] += resp[j] / norm;
    }
    double total = 0.0;
    for (double v : next) total += v;
    if (total <= 0.0) break;
    double change = 0.0;
    for (int j = 0; j < Z; ++j) {
      next[j] /= total;
      change = std::max(change, std::abs(next[j] - mix[j]));
    }
    mix.swap(next);
    if (change < tol) break;
  }
  return mix;
}

}  // namespace sttmrec::sttm
