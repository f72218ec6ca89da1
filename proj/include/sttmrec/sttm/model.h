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

#ifndef STTMREC_STTM_MODEL_H_
#define STTMREC_STTM_MODEL_H_

#include <cstdint>
#include <vector>

#include "sttmrec/common/random.h"
#include "sttmrec/corpus/sequence.h"
#include "sttmrec/sttm/counts.h"
#include "sttmrec/sttm/hyperparams.h"

namespace sttmrec::sttm {

// Which full conditionals the sampler uses.
//
// kCollapsed is the exact collapsed conditional of the generative process:
// a word's topic is weighted by its state's topic counts, and the outgoing
// transition factor is renormalized over the destination row with the
// self-transition correction. kApproximate weights topics by the time
// point's own topic counts and normalizes the outgoing factor over source
// states; it does not match the collapsed joint. See docs/derivation.md.
enum class ConditionalForm { kCollapsed, kApproximate };

enum class ScanOrder { kFixed, kRandom };

// Collapsed Gibbs sampler state for the conditional state-transition topic
// model. Single writer: mutate from one thread only.
class SttmModel {
 public:
  // Uniform random topic and state assignments from `seed`. Throws
  // InputError on an empty vocabulary, no sequences, or hyperparameters that
  // disagree with the data (doc type / social category out of range).
  static SttmModel Init(const corpus::SequenceSet& data, const Hyperparams& h,
                        uint64_t seed);

  // Rebuilds a model from explicit assignments (e.g. a saved model.json).
  // `topics` is flat in (sequence, step, token) order. Unlike Init, an
  // empty sequence set is accepted.
  static SttmModel FromAssignments(const corpus::SequenceSet& data,
                                   const Hyperparams& h, uint64_t seed,
                                   std::vector<int> topics,
                                   std::vector<int> states);

  const Hyperparams& hyperparams() const { return h_; }
  const corpus::SequenceSet& data() const { return data_; }
  uint64_t seed() const { return seed_; }
  int vocab_size() const { return counts_.V; }

  int num_sequences() const { return static_cast<int>(seq_begin_.size()) - 1; }
  int num_steps(int m) const { return seq_begin_[m + 1] - seq_begin_[m]; }
  int num_timepoints() const { return static_cast<int>(social_.size()); }
  int num_tokens(int m, int t) const {
    const int p = Flat(m, t);
    return token_begin_[p + 1] - token_begin_[p];
  }
  int word(int m, int t, int i) const { return words_[TokenIndex(m, t, i)]; }
  int topic(int m, int t, int i) const { return topics_[TokenIndex(m, t, i)]; }
  int state(int m, int t) const { return states_[Flat(m, t)]; }
  int social(int m, int t) const { return social_[Flat(m, t)]; }

  const std::vector<int>& topics() const { return topics_; }
  const std::vector<int>& states() const { return states_; }
  const CountTables<int>& counts() const { return counts_; }

  // Reassigns one site, keeping counts consistent.
  void SetTopic(int m, int t, int i, int j);
  void SetState(int m, int t, int c);

  // Full conditional over topics for token (m, t, i) given all other
  // assignments, normalized. Counts are unchanged on return.
  std::vector<double> TopicConditional(
      int m, int t, int i, ConditionalForm form = ConditionalForm::kCollapsed);
  // Full conditional over states for time point (m, t), normalized.
  std::vector<double> StateConditional(
      int m, int t, ConditionalForm form = ConditionalForm::kCollapsed);

  int SampleTopic(int m, int t, int i, Rng& rng,
                  ConditionalForm form = ConditionalForm::kCollapsed);
  int SampleState(int m, int t, Rng& rng,
                  ConditionalForm form = ConditionalForm::kCollapsed);

  // One pass over all topic sites, then all state sites.
  void Sweep(Rng& rng, ScanOrder order = ScanOrder::kFixed,
             ConditionalForm form = ConditionalForm::kCollapsed);

  // Collapsed log p(w, z, s, d | a) with all multinomials integrated out.
  double JointLogProb() const;

  // Tallies every count table from the current assignments.
  CountTables<int> RecountFromScratch() const;
  // Exact equality of the incremental tables with a fresh tally.
  bool Audit() const { return RecountFromScratch() == counts_; }

 private:
  SttmModel() = default;
  void Layout(const corpus::SequenceSet& data, const Hyperparams& h,
              bool allow_empty);

  int Flat(int m, int t) const { return seq_begin_[m] + t; }
  int TokenIndex(int m, int t, int i) const {
    return token_begin_[Flat(m, t)] + i;
  }
  bool HasPrev(int p) const { return step_of_[p] > 0; }
  bool HasNext(int p) const {
    return p + 1 < static_cast<int>(seq_of_.size()) &&
           seq_of_[p + 1] == seq_of_[p];
  }

  void TallyInto(CountTables<int>& c) const;
  // +1 / -1 for all of time point p's contributions except its topics.
  void UpdateState(int p, int c, int delta);
  void UpdateTopic(size_t token, int j, int delta);

  void TopicWeights(size_t token, ConditionalForm form,
                    std::vector<double>& out) const;
  void StateLogWeights(int p, ConditionalForm form,
                       std::vector<double>& out) const;

  Hyperparams h_;
  corpus::SequenceSet data_;
  uint64_t seed_ = 0;

  // Flat layout over time points p (sequence-major) and tokens.
  std::vector<int> seq_begin_;    // M + 1
  std::vector<int> seq_of_;       // P
  std::vector<int> step_of_;      // P
  std::vector<int> social_;       // P
  std::vector<int> token_begin_;  // P + 1
  std::vector<int> token_tp_;     // token -> time point
  std::vector<int> doc_counts_;   // P x D
  std::vector<int> num_docs_;     // P
  std::vector<int> words_;
  std::vector<int> topics_;
  std::vector<int> states_;

  CountTables<int> counts_;
  std::vector<double> scratch_;
};

}  // namespace sttmrec::sttm

#endif  // STTMREC_STTM_MODEL_H_
