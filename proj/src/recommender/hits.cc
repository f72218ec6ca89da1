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


#include "sttmrec/recommender/hits.h"

#include <algorithm>
#include <cmath>
#include <set>

namespace sttmrec::recommender {
namespace {

double Normalize(std::vector<double>& v) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (double& x : v) x /= norm;
  }
  return norm;
}

}  // namespace

std::map<std::string, Centrality> HitsCentrality(
    const std::vector<std::pair<std::string, std::string>>& edges,
    const std::vector<std::string>& extra_nodes, double tol, int max_iters) {
  std::map<std::string, int> index;
  for (const auto& [from, to] : edges) {
    index.emplace(from, 0);
    index.emplace(to, 0);
  }
  for (const auto& node : extra_nodes) index.emplace(node, 0);
  std::vector<std::string> names;
  for (auto& [name, i] : index) {
    i = static_cast<int>(names.size());
    names.push_back(name);
  }
  std::set<std::pair<int, int>> links;
  for (const auto& [from, to] : edges) {
    links.emplace(index.at(from), index.at(to));
  }

  const size_t n = names.size();
  std::vector<double> auth(n, 0.0), hub(n, 0.0);
  for (const auto& [from, to] : links) {
    hub[from] = 1.0;
    auth[to] = 1.0;
  }
  Normalize(auth);
  Normalize(hub);
  std::vector<double> next_auth(n), next_hub(n);
  for (int iter = 0; iter < max_iters; ++iter) {
    std::fill(next_auth.begin(), next_auth.end(), 0.0);
    std::fill(next_hub.begin(), next_hub.end(), 0.0);
    for (const auto& [from, to] : links) next_auth[to] += hub[from];
    Normalize(next_auth);
    for (const auto& [from, to] : links) next_hub[from] += next_auth[to];
    Normalize(next_hub);
    double change = 0.0;
    for (size_t i = 0; i < n; ++i) {
      change = std::max(change, std::abs(next_auth[i] - auth[i]));
      change = std::max(change, std::abs(next_hub[i] - hub[i]));
    }
    auth.swap(next_auth);
    hub.swap(next_hub);
    if (change < tol) break;
  }

  std::map<std::string, Centrality> out;
  for (size_t i = 0; i < n; ++i) {
    out[names[i]] = {auth[i], hub[i], 0.5 * (auth[i] + hub[i])};
  }
  return out;
}

}  // namespace sttmrec::recommender
