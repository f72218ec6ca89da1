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


#include "sttmrec/recommender/planted.h"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "sttmrec/common/error.h"
#include "sttmrec/common/random.h"

namespace sttmrec::recommender {
namespace {

std::string Id(const char* prefix, int i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%03d", prefix, i);
  return buf;
}

std::vector<double> Gaussian(Rng& rng, int n) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.Normal();
  return v;
}

// Rebuilds participants lists from the participation pairs; the first
// participant (initiator) is the lowest user id.
void FillParticipants(PlantedData& data) {
  for (auto& d : data.discussions) d.participants.clear();
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < data.discussions.size(); ++i) {
    index[data.discussions[i].id] = i;
  }
  for (const auto& [u, d] : data.participation) {
    data.discussions[index.at(d)].participants.push_back(u);
  }
  for (auto& d : data.discussions) {
    std::sort(d.participants.begin(), d.participants.end());
  }
}

}  // namespace

PlantedData GeneratePlanted(const PlantedSpec& spec, uint64_t seed) {
  if (spec.num_users < 1 || spec.num_discussions < 1 || spec.dims < 1 ||
      spec.num_weeks < 1 || spec.num_clusters < 1 ||
      spec.positives_per_user < 1 ||
      spec.positives_per_user > spec.num_discussions) {
    throw InputError("planted: invalid spec");
  }
  Rng rng(seed);
  PlantedData data;
  const int K = spec.dims;
  std::vector<std::vector<double>> x(spec.num_users), y(spec.num_discussions);
  const auto lambda = Gaussian(rng, K);
  const auto psi = Gaussian(rng, K);
  const auto delta = Gaussian(rng, K);
  const auto len = Gaussian(rng, K);
  std::vector<std::vector<double>> gamma(spec.num_weeks);
  for (auto& g : gamma) g = Gaussian(rng, K);
  for (int u = 0; u < spec.num_users; ++u) {
    UserAttributes a;
    a.goal_quality = static_cast<double>(rng.UniformInt(3));
    a.centrality = rng.Uniform();
    a.registration_week = static_cast<int>(rng.UniformInt(spec.num_weeks));
    x[u] = Gaussian(rng, K);
    for (int k = 0; k < K; ++k) {
      x[u][k] = spec.latent_scale * x[u][k] + gamma[a.registration_week][k];
      if (spec.flags.goal) x[u][k] += a.goal_quality * lambda[k];
      if (spec.flags.centrality) x[u][k] += 2.0 * a.centrality * psi[k];
    }
    data.attributes[Id("u", u)] = a;
  }
  std::vector<std::vector<double>> center(spec.num_clusters);
  for (auto& c : center) c = Gaussian(rng, K);
  for (int d = 0; d < spec.num_discussions; ++d) {
    Discussion disc;
    disc.id = Id("d", d);
    disc.n_replies = static_cast<double>(rng.UniformInt(21));
    disc.length = static_cast<double>(rng.UniformInt(201));
    y[d] = Gaussian(rng, K);
    for (int k = 0; k < K; ++k) {
      y[d][k] = spec.latent_scale * y[d][k] +
                spec.cluster_weight * center[d % spec.num_clusters][k] +
                disc.n_replies / 20.0 * delta[k] + disc.length / 200.0 * len[k];
    }
    data.discussions.push_back(std::move(disc));
  }
  for (int u = 0; u < spec.num_users; ++u) {
    std::vector<double> score(spec.num_discussions);
    for (int d = 0; d < spec.num_discussions; ++d) {
      score[d] = std::inner_product(x[u].begin(), x[u].end(), y[d].begin(),
                                    0.0);
    }
    std::vector<int> order(spec.num_discussions);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return score[a] > score[b]; });
    for (int k = 0; k < spec.positives_per_user; ++k) {
      data.participation.emplace_back(Id("u", u), Id("d", order[k]));
    }
  }
  std::sort(data.participation.begin(), data.participation.end());
  FillParticipants(data);
  return data;
}

PlantedData ShuffleLabels(const PlantedData& data, uint64_t seed) {
  Rng rng(seed);
  PlantedData out = data;
  std::map<std::string, int> count;
  for (const auto& [u, d] : data.participation) ++count[u];
  out.participation.clear();
  std::vector<int> order(data.discussions.size());
  for (const auto& [u, n] : count) {
    std::iota(order.begin(), order.end(), 0);
    rng.Shuffle(order.begin(), order.end());
    for (int k = 0; k < n; ++k) {
      out.participation.emplace_back(u, data.discussions[order[k]].id);
    }
  }
  std::sort(out.participation.begin(), out.participation.end());
  FillParticipants(out);
  return out;
}

}  // namespace sttmrec::recommender
