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


#ifndef STTMREC_RECOMMENDER_RELEVANCE_H_
#define STTMREC_RECOMMENDER_RELEVANCE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "sttmrec/recommender/rec_data.h"

namespace sttmrec::recommender {

// Which optional user features enter the score: CAMF uses neither,
// CAMF_G adds goal quality, CAMF_C centrality, CAMF_GC both.
struct FeatureFlags {
  bool goal = false;
  bool centrality = false;

  std::string Name() const;
  // Throws InputError on an unknown name.
  static FeatureFlags Parse(const std::string& name);
};

struct TrainOptions {
  int dims = 8;
  double learning_rate = 0.01;
  double regularization = 0.01;
  int epochs = 200;
  int negative_ratio = 3;
  uint64_t seed = 1;
  double init_scale = 0.1;
};

// Model inputs in dense index space. Count and size features are divided
// by their training maximum (the divisors are kept in `scale_*`).
struct RelevanceInputs {
  int num_users = 0;
  int num_discussions = 0;
  int num_weeks = 1;
  std::vector<double> participated;  // per user
  std::vector<double> initiated;     // per user
  std::vector<double> goal;          // per user, 0..2
  std::vector<double> centrality;    // per user
  std::vector<int> week;             // per user, registration week
  std::vector<double> replies;       // per discussion
  std::vector<double> length;        // per discussion
  std::vector<std::vector<int>> members;  // per discussion, sorted users
  double scale_participated = 1.0;
  double scale_initiated = 1.0;
  double scale_replies = 1.0;
  double scale_length = 1.0;
};

// Features from `data` with participation-derived parts (counts, members)
// taken from `train` only.
RelevanceInputs BuildRelevanceInputs(const RecDataset& data,
                                     const std::vector<IndexPair>& train);

using Vec = std::vector<double>;

struct RelevanceParams {
  double bias = 0.0;
  std::vector<Vec> P;       // per user
  std::vector<Vec> Q;       // per discussion
  std::vector<Vec> varphi;  // per user, implicit feedback
  std::vector<Vec> Gamma;   // per registration week
  Vec Phi, Theta, Lambda, Psi, Delta, L;

  // All-zero parameters of the given shape.
  static RelevanceParams Zeros(int dims, int users, int discussions,
                               int weeks);
  int dims() const { return static_cast<int>(Phi.size()); }
};

struct RelevanceModel {
  RelevanceInputs inputs;
  RelevanceParams params;
  FeatureFlags flags;
  TrainOptions options;
  std::vector<double> epoch_loss;  // mean loss per epoch
};

// bias + x_u . y_d where
//   x_u = P_u + phi_u Phi + theta_u Theta + lambda_u Lambda + psi_u Psi + Gamma_week(u)
//   y_d = Q_d + delta_d Delta + l_d L + |N|^-1/2 sum_{v in N} varphi_v
// and N is the discussion's members without u. Lambda and Psi only enter
// when the matching flag is set. Throws InputError for unknown indices.
double PredictRelevance(const RelevanceModel& model, int u, int d);

struct Example {
  int user = 0;
  int discussion = 0;
  double target = 0.0;
};

// (target - prediction)^2 plus regularization * squared norm of every
// latent vector the example touches. The bias is not regularized.
double ExampleLoss(const RelevanceModel& model, const Example& ex,
                   double regularization);

// Dense gradient of the summed ExampleLoss over `examples`, shaped like
// model.params.
RelevanceParams LossGradient(const RelevanceModel& model,
                             const std::vector<Example>& examples,
                             double regularization);

// Pointwise SGD with `negative_ratio` uniformly sampled negatives per
// positive each epoch. Deterministic for a fixed seed. Throws InputError
// when `train` is empty.
RelevanceModel TrainRelevance(const RecDataset& data,
                              const std::vector<IndexPair>& train,
                              const FeatureFlags& flags,
                              const TrainOptions& options);

nlohmann::json RelevanceModelToJson(const RelevanceModel& model);
RelevanceModel RelevanceModelFromJson(const nlohmann::json& j);

}  // namespace sttmrec::recommender

#endif  // STTMREC_RECOMMENDER_RELEVANCE_H_
