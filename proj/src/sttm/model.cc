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

#include "sttmrec/sttm/model.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sttmrec/common/error.h"
#include "sttmrec/common/math_util.h"

namespace sttmrec::sttm {

void SttmModel::Layout(const corpus::SequenceSet& data, const Hyperparams& h,
                       bool allow_empty) {
  h.Validate();
  if (data.vocabulary.empty()) throw InputError("empty vocabulary");
  if (data.sequences.empty() && !allow_empty) {
    throw InputError("no sequences to model");
  }
  corpus::ValidateSequenceSet(data);

  h_ = h;
  data_ = data;
  const int D = h.num_doc_types;
  const int Z = h.num_topics;

  seq_begin_ = {0};
  token_begin_ = {0};
  for (size_t m = 0; m < data.sequences.size(); ++m) {
    const auto& seq = data.sequences[m];
    for (size_t t = 0; t < seq.steps.size(); ++t) {
      const auto& step = seq.steps[t];
      if (step.social >= h.num_social) {
        throw InputError("social category " + std::to_string(step.social) +
                         " exceeds A = " + std::to_string(h.num_social));
      }
      const int p = static_cast<int>(social_.size());
      seq_of_.push_back(static_cast<int>(m));
      step_of_.push_back(static_cast<int>(t));
      social_.push_back(step.social);
      doc_counts_.resize(doc_counts_.size() + D, 0);
      num_docs_.push_back(static_cast<int>(step.docs.size()));
      for (const auto& doc : step.docs) {
        if (doc.type >= D) {
          throw InputError("document type " + std::to_string(doc.type) +
                           " exceeds D = " + std::to_string(D));
        }
        ++doc_counts_[static_cast<size_t>(p) * D + doc.type];
        for (int w : doc.tokens) {
          words_.push_back(w);
          token_tp_.push_back(p);
        }
      }
      token_begin_.push_back(static_cast<int>(words_.size()));
    }
    seq_begin_.push_back(static_cast<int>(social_.size()));
  }
  counts_.Resize(h.num_states, h.num_social, Z, D,
                 static_cast<int>(data.vocabulary.size()),
                 static_cast<int>(social_.size()));
}

SttmModel SttmModel::Init(const corpus::SequenceSet& data,
                          const Hyperparams& h, uint64_t seed) {
  SttmModel model;
  model.Layout(data, h, /*allow_empty=*/false);
  model.seed_ = seed;
  Rng rng(seed);
  model.states_.resize(model.social_.size());
  for (int& s : model.states_) s = static_cast<int>(rng.UniformInt(h.num_states));
  model.topics_.resize(model.words_.size());
  for (int& z : model.topics_) z = static_cast<int>(rng.UniformInt(h.num_topics));
  model.TallyInto(model.counts_);
  return model;
}

SttmModel SttmModel::FromAssignments(const corpus::SequenceSet& data,
                                     const Hyperparams& h, uint64_t seed,
                                     std::vector<int> topics,
                                     std::vector<int> states) {
  SttmModel model;
  model.Layout(data, h, /*allow_empty=*/true);
  model.seed_ = seed;
  if (topics.size() != model.words_.size() ||
      states.size() != model.social_.size()) {
    throw InputError("assignment sizes do not match the sequence data");
  }
  for (int z : topics) {
    if (z < 0 || z >= h.num_topics) throw InputError("topic out of range");
  }
  for (int s : states) {
    if (s < 0 || s >= h.num_states) throw InputError("state out of range");
  }
  model.topics_ = std::move(topics);
  model.states_ = std::move(states);
  model.TallyInto(model.counts_);
  return model;
}

void SttmModel::TallyInto(CountTables<int>& c) const {
  c.Resize(h_.num_states, h_.num_social, h_.num_topics, h_.num_doc_types,
           static_cast<int>(data_.vocabulary.size()),
           static_cast<int>(social_.size()));
  const int D = h_.num_doc_types;
  const int P = static_cast<int>(social_.size());
  for (int p = 0; p < P; ++p) {
    const int s = states_[p];
    for (int k = 0; k < D; ++k) c.sd[c.SD(s, k)] += doc_counts_[p * D + k];
    c.sd_total[s] += num_docs_[p];
    const int from = HasPrev(p) ? states_[p - 1] : c.StartRow();
    const int a_in = HasPrev(p) ? social_[p - 1] : social_[p];
    ++c.sas[c.SAS(from, a_in, s)];
    ++c.sas_total[c.Row(from, a_in)];
    for (int i = token_begin_[p]; i < token_begin_[p + 1]; ++i) {
      const int j = topics_[i];
      ++c.zw[c.ZW(j, words_[i])];
      ++c.z_total[j];
      ++c.sz[c.SZ(s, j)];
      ++c.sz_total[s];
      ++c.mtz[c.MTZ(p, j)];
    }
  }
}

CountTables<int> SttmModel::RecountFromScratch() const {
  CountTables<int> c;
  TallyInto(c);
  return c;
}

void SttmModel::UpdateState(int p, int c, int delta) {
  auto& n = counts_;
  const int D = h_.num_doc_types;
  const int Z = h_.num_topics;
  for (int k = 0; k < D; ++k) n.sd[n.SD(c, k)] += delta * doc_counts_[p * D + k];
  n.sd_total[c] += delta * num_docs_[p];
  for (int j = 0; j < Z; ++j) n.sz[n.SZ(c, j)] += delta * n.mtz[n.MTZ(p, j)];
  n.sz_total[c] += delta * (token_begin_[p + 1] - token_begin_[p]);
  const int from = HasPrev(p) ? states_[p - 1] : n.StartRow();
  const int a_in = HasPrev(p) ? social_[p - 1] : social_[p];
  n.sas[n.SAS(from, a_in, c)] += delta;
  n.sas_total[n.Row(from, a_in)] += delta;
  if (HasNext(p)) {
    n.sas[n.SAS(c, social_[p], states_[p + 1])] += delta;
    n.sas_total[n.Row(c, social_[p])] += delta;
  }
}

void SttmModel::UpdateTopic(size_t token, int j, int delta) {
  auto& n = counts_;
  const int p = token_tp_[token];
  const int s = states_[p];
  n.zw[n.ZW(j, words_[token])] += delta;
  n.z_total[j] += delta;
  n.sz[n.SZ(s, j)] += delta;
  n.sz_total[s] += delta;
  n.mtz[n.MTZ(p, j)] += delta;
}

void SttmModel::SetTopic(int m, int t, int i, int j) {
  const size_t k = TokenIndex(m, t, i);
  UpdateTopic(k, topics_[k], -1);
  topics_[k] = j;
  UpdateTopic(k, j, +1);
}

void SttmModel::SetState(int m, int t, int c) {
  const int p = Flat(m, t);
  UpdateState(p, states_[p], -1);
  states_[p] = c;
  UpdateState(p, c, +1);
}

void SttmModel::TopicWeights(size_t token, ConditionalForm form,
                             std::vector<double>& out) const {
  const auto& n = counts_;
  const int Z = h_.num_topics;
  const int p = token_tp_[token];
  const int s = states_[p];
  const int w = words_[token];
  const double vbeta = n.V * h_.beta;
  out.resize(Z);
  for (int j = 0; j < Z; ++j) {
    const double mix = form == ConditionalForm::kCollapsed
                           ? n.sz[n.SZ(s, j)] + h_.alpha
                           : n.mtz[n.MTZ(p, j)] + h_.alpha;
    out[j] = mix * (n.zw[n.ZW(j, w)] + h_.beta) / (n.z_total[j] + vbeta);
  }
}

void SttmModel::StateLogWeights(int p, ConditionalForm form,
                                std::vector<double>& out) const {
  const auto& n = counts_;
  const int S = h_.num_states;
  const int D = h_.num_doc_types;
  const int Z = h_.num_topics;
  const int ntok = token_begin_[p + 1] - token_begin_[p];
  const bool has_prev = HasPrev(p);
  const int prev = has_prev ? states_[p - 1] : n.StartRow();
  const int a_in = has_prev ? social_[p - 1] : social_[p];
  const size_t in_row = n.Row(prev, a_in);
  const double sgamma = S * h_.gamma;
  out.assign(S, 0.0);

  // Column sums used by the approximate outgoing factor.
  double source_den = 0.0;
  if (HasNext(p) && form == ConditionalForm::kApproximate) {
    const int next = states_[p + 1];
    for (int c = 0; c < S; ++c) {
      source_den += n.sas[n.SAS(c, social_[p], next)] + h_.gamma;
    }
    if (has_prev && prev == next) source_den += 1.0;
  }

  for (int c = 0; c < S; ++c) {
    double lw = 0.0;
    // Document-type block.
    for (int k = 0; k < D; ++k) {
      const int cnt = doc_counts_[p * D + k];
      if (cnt) lw += LogRisingFactorial(n.sd[n.SD(c, k)] + h_.nu, cnt);
    }
    lw -= LogRisingFactorial(n.sd_total[c] + D * h_.nu, num_docs_[p]);
    // Topic block.
    for (int j = 0; j < Z; ++j) {
      const int cnt = n.mtz[n.MTZ(p, j)];
      if (cnt) lw += LogRisingFactorial(n.sz[n.SZ(c, j)] + h_.alpha, cnt);
    }
    lw -= LogRisingFactorial(n.sz_total[c] + Z * h_.alpha, ntok);
    // Incoming transition (from the virtual start state at t = 0).
    lw += std::log(n.sas[in_row * S + c] + h_.gamma) -
          std::log(n.sas_total[in_row] + sgamma);
    // Outgoing transition; absent at the last time point.
    if (HasNext(p)) {
      const int next = states_[p + 1];
      const int a_out = social_[p];
      const size_t out_row = n.Row(c, a_out);
      if (form == ConditionalForm::kCollapsed) {
        // The incoming transition was added to row (prev, a_in) first; it
        // lands in the outgoing row iff prev == c and a_in == a_out.
        const int same_row = has_prev && prev == c && a_in == a_out;
        const double num =
            n.sas[out_row * S + next] + (same_row && c == next) + h_.gamma;
        const double den = n.sas_total[out_row] + same_row + sgamma;
        lw += std::log(num) - std::log(den);
      } else {
        const int indicator = has_prev && prev == c && c == next;
        lw += std::log(n.sas[out_row * S + next] + indicator + h_.gamma) -
              std::log(source_den);
      }
    }
    out[c] = lw;
  }
}

std::vector<double> SttmModel::TopicConditional(int m, int t, int i,
                                                ConditionalForm form) {
  const size_t k = TokenIndex(m, t, i);
  const int old = topics_[k];
  UpdateTopic(k, old, -1);
  std::vector<double> w;
  TopicWeights(k, form, w);
  UpdateTopic(k, old, +1);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= total;
  return w;
}

std::vector<double> SttmModel::StateConditional(int m, int t,
                                                ConditionalForm form) {
  const int p = Flat(m, t);
  UpdateState(p, states_[p], -1);
  std::vector<double> lw;
  StateLogWeights(p, form, lw);
  UpdateState(p, states_[p], +1);
  NormalizeLogWeights(lw);
  return lw;
}

int SttmModel::SampleTopic(int m, int t, int i, Rng& rng,
                           ConditionalForm form) {
  const size_t k = TokenIndex(m, t, i);
  UpdateTopic(k, topics_[k], -1);
  TopicWeights(k, form, scratch_);
  const int j = rng.Categorical(scratch_);
  topics_[k] = j;
  UpdateTopic(k, j, +1);
  return j;
}

int SttmModel::SampleState(int m, int t, Rng& rng, ConditionalForm form) {
  const int p = Flat(m, t);
  UpdateState(p, states_[p], -1);
  StateLogWeights(p, form, scratch_);
  const double max = *std::max_element(scratch_.begin(), scratch_.end());
  for (double& x : scratch_) x = std::exp(x - max);
  const int c = rng.Categorical(scratch_);
  states_[p] = c;
  UpdateState(p, c, +1);
  return c;
}

void SttmModel::Sweep(Rng& rng, ScanOrder order, ConditionalForm form) {
  const int P = num_timepoints();
  const size_t N = words_.size();
  auto sample_token = [&](size_t k) {
    UpdateTopic(k, topics_[k], -1);
    TopicWeights(k, form, scratch_);
    topics_[k] = rng.Categorical(scratch_);
    UpdateTopic(k, topics_[k], +1);
  };
  auto sample_state = [&](int p) {
    SampleState(seq_of_[p], step_of_[p], rng, form);
  };
  if (order == ScanOrder::kFixed) {
    for (size_t k = 0; k < N; ++k) sample_token(k);
    for (int p = 0; p < P; ++p) sample_state(p);
    return;
  }
  std::vector<size_t> tokens(N);
  std::iota(tokens.begin(), tokens.end(), size_t{0});
  rng.Shuffle(tokens.begin(), tokens.end());
  for (size_t k : tokens) sample_token(k);
  std::vector<int> points(P);
  std::iota(points.begin(), points.end(), 0);
  rng.Shuffle(points.begin(), points.end());
  for (int p : points) sample_state(p);
}

double SttmModel::JointLogProb() const {
  const auto& n = counts_;
  const int S = h_.num_states;
  double lp = 0.0;
  // Dirichlet-multinomial marginal of one count row.
  auto row = [&lp](const int* cnt, int len, int total, double conc) {
    for (int i = 0; i < len; ++i) {
      if (cnt[i]) lp += LogRisingFactorial(conc, cnt[i]);
    }
    lp -= LogRisingFactorial(len * conc, total);
  };
  for (int j = 0; j < n.Z; ++j) {
    row(&n.zw[n.ZW(j, 0)], n.V, n.z_total[j], h_.beta);
  }
  for (int c = 0; c < S; ++c) {
    row(&n.sz[n.SZ(c, 0)], n.Z, n.sz_total[c], h_.alpha);
    row(&n.sd[n.SD(c, 0)], n.D, n.sd_total[c], h_.nu);
  }
  for (int from = 0; from <= S; ++from) {
    for (int a = 0; a < n.A; ++a) {
      row(&n.sas[n.SAS(from, a, 0)], S, n.sas_total[n.Row(from, a)], h_.gamma);
    }
  }
  return lp;
}

}  // namespace sttmrec::sttm
