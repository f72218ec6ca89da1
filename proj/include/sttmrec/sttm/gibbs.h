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

#ifndef STTMREC_STTM_GIBBS_H_
#define STTMREC_STTM_GIBBS_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "sttmrec/corpus/sequence.h"
#include "sttmrec/sttm/model.h"
#include "sttmrec/sttm/profiles.h"

namespace sttmrec::sttm {

struct GibbsOptions {
  int sweeps = 2000;
  int burn_in = 1000;
  int thin = 10;
  ScanOrder scan = ScanOrder::kFixed;
  ConditionalForm form = ConditionalForm::kCollapsed;
  // Called after every sweep with (1-based sweep, joint log-probability).
  std::function<void(int, double)> on_sweep;
};

struct GibbsResult {
  StateProfiles profiles;
  std::vector<double> log_prob;  // one entry per sweep
  int num_snapshots = 0;
};

// Runs `options.sweeps` sweeps. After burn-in a count snapshot is taken
// every `thin` sweeps and the profiles are estimated from the snapshot
// average; with no snapshot the current counts are used. The sampler RNG is
// derived from the model seed, so identical models give identical results.
GibbsResult RunGibbs(SttmModel& model, const GibbsOptions& options);

// Profiles from the model's current counts.
StateProfiles EstimateProfiles(const SttmModel& model);

struct ChainOutcome {
  SttmModel model;
  GibbsResult result;
  int chain_index = 0;
};

// Runs `num_chains` independent chains (seeds seed, seed+1, ...) on separate
// threads and keeps the one with the highest final joint log-probability;
// ties go to the lowest index.
ChainOutcome RunChains(const corpus::SequenceSet& data, const Hyperparams& h,
                       uint64_t seed, int num_chains,
                       const GibbsOptions& options);

}  // namespace sttmrec::sttm

#endif  // STTMREC_STTM_GIBBS_H_
