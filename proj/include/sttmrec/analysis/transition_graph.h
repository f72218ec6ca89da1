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


#ifndef STTMREC_ANALYSIS_TRANSITION_GRAPH_H_
#define STTMREC_ANALYSIS_TRANSITION_GRAPH_H_

#include <string>
#include <vector>

#include "sttmrec/sttm/counts.h"

namespace sttmrec::analysis {

// Transition counts restricted to one social category. An edge s -> s'
// counts steps whose previous week had this category (the conditioning of
// the transition tables); a start edge counts sequences whose first week
// had it. A node's visits are its arrivals: incoming start edges plus
// incoming transitions.
struct TransitionGraph {
  int category = 0;
  std::vector<long> visits;               // [state]
  std::vector<long> start;                // [state]
  std::vector<std::vector<long>> edges;   // [from][to]

  int num_states() const { return static_cast<int>(visits.size()); }
};

// From decoded paths and per-step categories (S1 = 0). Throws InputError
// on mismatched lengths, out-of-range states or an unknown category.
TransitionGraph BuildTransitionGraph(
    const std::vector<std::vector<int>>& paths,
    const std::vector<std::vector<int>>& social, int num_states,
    int num_social, int category);

// From the state-transition counts of a fitted model.
TransitionGraph TransitionGraphFromCounts(const sttm::CountTables<int>& counts,
                                          int category);

// Graphviz digraph. Node width grows with sqrt(visits), edge penwidth and
// darkness linearly with the count; zero-count edges are omitted. Output is
// a pure function of the graph and `title`.
std::string ToDot(const TransitionGraph& graph, const std::string& title);

}  // namespace sttmrec::analysis

#endif  // STTMREC_ANALYSIS_TRANSITION_GRAPH_H_
