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


#ifndef STTMREC_RECOMMENDER_PLANTED_H_
#define STTMREC_RECOMMENDER_PLANTED_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sttmrec/recommender/rec_data.h"
#include "sttmrec/recommender/relevance.h"

namespace sttmrec::recommender {

struct PlantedSpec {
  int num_users = 20;
  int num_discussions = 30;
  int dims = 2;
  int positives_per_user = 10;
  int num_weeks = 3;
  // Weight of the free per-user and per-discussion vectors relative to
  // the feature-driven parts of the score.
  double latent_scale = 0.05;
  // Discussion d shares the vector of cluster d % num_clusters, scaled by
  // cluster_weight, which keeps the positive sets well separated; 0 disables.
  int num_clusters = 3;
  double cluster_weight = 8.0;
  FeatureFlags flags{true, true};
};

// Participation data drawn from a planted relevance model: each user takes
// part in the `positives_per_user` discussions with the highest planted
// score. The planted user vector is latent_scale * P_u + Gamma_week plus
// goal quality and centrality terms (only when the matching flag is set);
// the discussion vector is latent_scale * Q_d plus reply and length terms.
struct PlantedData {
  std::vector<Discussion> discussions;
  std::vector<UserDiscussion> participation;
  std::map<std::string, UserAttributes> attributes;
};

PlantedData GeneratePlanted(const PlantedSpec& spec, uint64_t seed);

// Same users, discussions and per-user positive counts, with each user's
// positives replaced by uniformly random discussions.
PlantedData ShuffleLabels(const PlantedData& data, uint64_t seed);

}  // namespace sttmrec::recommender

#endif  // STTMREC_RECOMMENDER_PLANTED_H_
