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


#include "sttmrec/recommender/min_cost_flow.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace sttmrec::recommender {
namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

}  // namespace

MinCostFlow::MinCostFlow(int num_nodes) : adj_(num_nodes) {}

int MinCostFlow::AddArc(int from, int to, int64_t capacity, int64_t cost) {
  if (from < 0 || to < 0 || from >= num_nodes() || to >= num_nodes() ||
      capacity < 0) {
    throw std::invalid_argument("min cost flow: bad arc");
  }
  const int id = static_cast<int>(arcs_.size() / 2);
  adj_[from].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, capacity, cost, 0});
  adj_[to].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, 0, -cost, 0});
  return id;
}

MinCostFlow::Result MinCostFlow::Solve(int source, int sink, bool max_flow,
                                       int64_t flow_limit) {
  const int n = num_nodes();
  // Bellman-Ford over residual arcs for the initial potentials.
  std::vector<int64_t> potential(n, kInf);
  potential[source] = 0;
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (int u = 0; u < n; ++u) {
      if (potential[u] == kInf) continue;
      for (int a : adj_[u]) {
        if (Residual(a) <= 0) continue;
        const int64_t d = potential[u] + arcs_[a].cost;
        if (d < potential[arcs_[a].to]) {
          potential[arcs_[a].to] = d;
          changed = true;
        }
      }
    }
    if (!changed) break;
    if (round == n - 1) {
      throw std::logic_error("min cost flow: negative cycle");
    }
  }
  for (auto& p : potential) {
    if (p == kInf) p = 0;
  }

  Result result;
  std::vector<int64_t> dist(n);
  std::vector<int> via(n);
  while (result.flow < flow_limit) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(via.begin(), via.end(), -1);
    dist[source] = 0;
    using Entry = std::pair<int64_t, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    queue.emplace(0, source);
    while (!queue.empty()) {
      const auto [d, u] = queue.top();
      queue.pop();
      if (d != dist[u]) continue;
      for (int a : adj_[u]) {
        if (Residual(a) <= 0) continue;
        const int v = arcs_[a].to;
        const int64_t nd = d + arcs_[a].cost + potential[u] - potential[v];
        if (nd < dist[v]) {
          dist[v] = nd;
          via[v] = a;
          queue.emplace(nd, v);
        }
      }
    }
    if (dist[sink] == kInf) break;
    for (int v = 0; v < n; ++v) {
      if (dist[v] < kInf) potential[v] += dist[v];
    }
    const int64_t path_cost = potential[sink] - potential[source];
    if (!max_flow && path_cost >= 0) break;

    int64_t push = flow_limit - result.flow;
    for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
      push = std::min(push, Residual(via[v]));
    }
    for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
      arcs_[via[v]].flow += push;
      arcs_[via[v] ^ 1].flow -= push;
    }
    result.flow += push;
    result.cost += push * path_cost;
  }
  return result;
}

}  // namespace sttmrec::recommender
