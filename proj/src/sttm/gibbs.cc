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

#include "sttmrec/sttm/gibbs.h"

#include <optional>
#include <thread>

#include "sttmrec/common/error.h"

namespace sttmrec::sttm {
namespace {

std::vector<int> StepsPerSequence(const SttmModel& model) {
  std::vector<int> steps;
  for (int m = 0; m < model.num_sequences(); ++m) {
    steps.push_back(model.num_steps(m));
  }
  return steps;
}

}  // namespace

StateProfiles EstimateProfiles(const SttmModel& model) {
  return EstimateProfiles(model.counts(), model.hyperparams(),
                          StepsPerSequence(model), model.data().vocabulary);
}

GibbsResult RunGibbs(SttmModel& model, const GibbsOptions& options) {
  if (options.sweeps < 0 || options.burn_in < 0 ||
      options.burn_in > options.sweeps) {
    throw InputError("Gibbs schedule needs 0 <= burn_in <= sweeps");
  }
  if (options.thin < 1) throw InputError("thin must be >= 1");

  GibbsResult result;
  // Offset so the sampler stream differs from the initialization stream.
  Rng rng(model.seed() ^ 0x9e3779b97f4a7c15ULL);
  CountTables<double> sum;
  const auto& c = model.counts();
  sum.Resize(c.S, c.A, c.Z, c.D, c.V, c.num_timepoints);

  for (int sweep = 1; sweep <= options.sweeps; ++sweep) {
    model.Sweep(rng, options.scan, options.form);
    const double lp = model.JointLogProb();
    result.log_prob.push_back(lp);
    if (options.on_sweep) options.on_sweep(sweep, lp);
    if (sweep > options.burn_in &&
        (sweep - options.burn_in) % options.thin == 0) {
      sum.Accumulate(model.counts(), 1.0);
      ++result.num_snapshots;
    }
  }

  if (result.num_snapshots == 0) {
    result.profiles = EstimateProfiles(model);
  } else {
    CountTables<double> mean;
    mean.Resize(c.S, c.A, c.Z, c.D, c.V, c.num_timepoints);
    mean.Accumulate(sum, 1.0 / result.num_snapshots);
    result.profiles = EstimateProfiles(mean, model.hyperparams(),
                                       StepsPerSequence(model),
                                       model.data().vocabulary);
  }
  return result;
}

ChainOutcome RunChains(const corpus::SequenceSet& data, const Hyperparams& h,
                       uint64_t seed, int num_chains,
                       const GibbsOptions& options) {
  if (num_chains < 1) throw InputError("--chains must be >= 1");
  std::vector<std::optional<ChainOutcome>> outcomes(num_chains);
  std::vector<std::exception_ptr> errors(num_chains);
  auto run = [&](int i) {
    try {
      SttmModel model = SttmModel::Init(data, h, seed + i);
      GibbsOptions chain_options = options;
      if (i != 0) chain_options.on_sweep = nullptr;
      GibbsResult result = RunGibbs(model, chain_options);
      outcomes[i].emplace(ChainOutcome{std::move(model), std::move(result), i});
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (num_chains == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < num_chains; ++i) threads.emplace_back(run, i);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  int best = 0;
  auto final_lp = [&](int i) {
    const auto& trace = outcomes[i]->result.log_prob;
    return trace.empty() ? outcomes[i]->model.JointLogProb() : trace.back();
  };
  for (int i = 1; i < num_chains; ++i) {
    if (final_lp(i) > final_lp(best)) best = i;
  }
  return std::move(*outcomes[best]);
}

}  // namespace sttmrec::sttm
