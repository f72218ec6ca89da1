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


#ifndef STTMREC_RECOMMENDER_MIN_COST_FLOW_H_
#define STTMREC_RECOMMENDER_MIN_COST_FLOW_H_

#include <cstdint>
#include <vector>

namespace sttmrec::recommender {

// Min-cost flow by successive shortest paths with Johnson potentials.
// Costs may be negative on the input graph as long as it has no negative
// cycle; initial potentials come from Bellman-Ford. Arcs are scanned in id
// order and the first shortest path found is kept, so results depend only
// on the order arcs were added.
class MinCostFlow {
 public:
  explicit MinCostFlow(int num_nodes);

  // Returns the arc id.
  int AddArc(int from, int to, int64_t capacity, int64_t cost);

  struct Result {
    int64_t flow = 0;
    int64_t cost = 0;
  };

  // Pushes flow from `source` to `sink` along shortest paths while the path
  // cost is negative (or, with `max_flow`, until `flow_limit` is reached).
  // With max_flow false this minimizes cost over all flow values.
  Result Solve(int source, int sink, bool max_flow = false,
               int64_t flow_limit = INT64_MAX);

  int64_t Flow(int arc) const { return arcs_[2 * arc].flow; }
  int num_nodes() const { return static_cast<int>(adj_.size()); }

 private:
  struct Arc {
    int to;
    int64_t capacity;
    int64_t cost;
    int64_t flow;
  };
  int64_t Residual(int a) const { return arcs_[a].capacity - arcs_[a].flow; }

  std::vector<Arc> arcs_;  // arc 2k is forward, 2k + 1 its reverse
  std::vector<std::vector<int>> adj_;
};

}  // namespace sttmrec::recommender

#endif  // STTMREC_RECOMMENDER_MIN_COST_FLOW_H_
