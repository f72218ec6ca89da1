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

#include "sttmrec/sttm/synthetic.h"

#include <algorithm>
#include <cstdio>
#include <string>

#include "sttmrec/common/error.h"
#include "sttmrec/common/random.h"

namespace sttmrec::sttm {
namespace {

std::vector<double> Normalized(std::vector<double> w) {
  double total = 0.0;
  for (double v : w) total += v;
  for (double& v : w) v /= total;
  return w;
}

std::string Padded(const char* prefix, int i, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%0*d", prefix, width, i);
  return buf;
}

}  // namespace

SyntheticData GenerateSynthetic(const StateProfiles& truth,
                                const SyntheticSpec& spec, uint64_t seed) {
  truth.Validate(1e-9);
  if (truth.vocabulary.size() != static_cast<size_t>(truth.vocab_size())) {
    throw InputError("truth vocabulary size differs from phi width");
  }
  if (spec.num_sequences < 0 || spec.length < 1 || spec.min_docs < 1 ||
      spec.max_docs < spec.min_docs || spec.min_tokens < 1 ||
      spec.max_tokens < spec.min_tokens) {
    throw InputError("invalid synthetic spec");
  }
  if (!spec.social.empty() &&
      spec.social.size() != static_cast<size_t>(spec.num_sequences)) {
    throw InputError("social schedule must list every sequence");
  }
  const int A = truth.num_social();

  Rng rng(seed);
  SyntheticData out;
  out.data.vocabulary = truth.vocabulary;
  out.data.num_doc_types = truth.num_doc_types();
  out.data.num_social = A;
  out.truth.profiles = truth;
  out.truth.profiles.theta_doc.clear();

  const int width = spec.num_sequences >= 10000 ? 6 : 4;
  for (int m = 0; m < spec.num_sequences; ++m) {
    corpus::Sequence seq;
    seq.user_id = Padded("u", m, width);
    std::vector<int> path;
    int prev = -1;
    int prev_social = 0;
    for (int t = 0; t < spec.length; ++t) {
      corpus::TimePoint step;
      step.week = t;
      if (spec.social.empty()) {
        step.social = static_cast<int>(rng.UniformInt(A));
      } else {
        if (spec.social[m].size() != static_cast<size_t>(spec.length)) {
          throw InputError("social schedule length mismatch for sequence " +
                           std::to_string(m));
        }
        step.social = spec.social[m][t];
        if (step.social < 0 || step.social >= A) {
          throw InputError("social schedule entry out of range");
        }
      }
      const auto& row =
          t == 0 ? truth.init[step.social] : truth.pi[prev][prev_social];
      const int c = rng.Categorical(row);
      path.push_back(c);
      const int ndocs =
          spec.min_docs +
          static_cast<int>(rng.UniformInt(spec.max_docs - spec.min_docs + 1));
      for (int k = 0; k < ndocs; ++k) {
        corpus::SeqDocument doc;
        doc.type = rng.Categorical(truth.psi[c]);
        const int ntok = spec.min_tokens +
                         static_cast<int>(rng.UniformInt(
                             spec.max_tokens - spec.min_tokens + 1));
        for (int i = 0; i < ntok; ++i) {
          const int j = rng.Categorical(truth.theta[c]);
          out.truth.topics.push_back(j);
          doc.tokens.push_back(rng.Categorical(truth.phi[j]));
        }
        step.docs.push_back(std::move(doc));
      }
      seq.steps.push_back(std::move(step));
      prev = c;
      prev_social = seq.steps.back().social;
    }
    out.truth.states.push_back(std::move(path));
    out.data.sequences.push_back(std::move(seq));
  }
  return out;
}

StateProfiles WellSeparatedTruth(const Hyperparams& h, int vocab_size) {
  h.Validate();
  if (vocab_size < h.num_topics) {
    throw InputError("vocabulary must have at least one word per topic");
  }
  const int S = h.num_states;
  const int Z = h.num_topics;
  const int D = h.num_doc_types;
  const int A = h.num_social;
  StateProfiles p;
  for (int w = 0; w < vocab_size; ++w) p.vocabulary.push_back(Padded("w", w, 3));

  const int block = vocab_size / Z;
  for (int j = 0; j < Z; ++j) {
    std::vector<double> row(vocab_size, 0.5);
    const int end = j == Z - 1 ? vocab_size : (j + 1) * block;
    for (int w = j * block; w < end; ++w) row[w] = 40.0;
    p.phi.push_back(Normalized(std::move(row)));
  }
  for (int c = 0; c < S; ++c) {
    std::vector<double> topics(Z, 0.0);
    for (int j = 0; j < Z; ++j) {
      const int home = j % S;
      const int round = j / S;
      if (c == home) topics[j] += 1.0;
      if (S > 1 && c == (home + 1) % S) topics[j] += 0.25 + 0.5 * round;
    }
    if (*std::max_element(topics.begin(), topics.end()) == 0.0) {
      topics.assign(Z, 1.0);  // more states than topics can cover
    }
    p.theta.push_back(Normalized(std::move(topics)));
    std::vector<double> types(D, 1.0);
    types[c % D] += 9.0;
    p.psi.push_back(Normalized(std::move(types)));
  }
  p.pi.assign(S, Matrix(A));
  for (int c = 0; c < S; ++c) {
    for (int a = 0; a < A; ++a) {
      std::vector<double> next(S, 1.0);
      next[(c + a) % S] += 5.0;
      p.pi[c][a] = Normalized(std::move(next));
    }
  }
  for (int a = 0; a < A; ++a) {
    std::vector<double> first(S, 1.0);
    first[a % S] += 2.0;
    p.init.push_back(Normalized(std::move(first)));
  }
  return p;
}

void to_json(nlohmann::json& j, const SyntheticSpec& s) {
  j = nlohmann::json{{"num_sequences", s.num_sequences},
                     {"length", s.length},
                     {"min_docs", s.min_docs},
                     {"max_docs", s.max_docs},
                     {"min_tokens", s.min_tokens},
                     {"max_tokens", s.max_tokens},
                     {"social", s.social}};
}

void from_json(const nlohmann::json& j, SyntheticSpec& s) {
  s = SyntheticSpec{};
  s.num_sequences = j.value("num_sequences", s.num_sequences);
  s.length = j.value("length", s.length);
  s.min_docs = j.value("min_docs", s.min_docs);
  s.max_docs = j.value("max_docs", s.max_docs);
  s.min_tokens = j.value("min_tokens", s.min_tokens);
  s.max_tokens = j.value("max_tokens", s.max_tokens);
  if (j.contains("social")) j.at("social").get_to(s.social);
}

void to_json(nlohmann::json& j, const SyntheticTruth& t) {
  j = nlohmann::json{
      {"profiles", t.profiles}, {"states", t.states}, {"topics", t.topics}};
}

void from_json(const nlohmann::json& j, SyntheticTruth& t) {
  j.at("profiles").get_to(t.profiles);
  j.at("states").get_to(t.states);
  j.at("topics").get_to(t.topics);
}

}  // namespace sttmrec::sttm
