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


#ifndef STTMREC_RECOMMENDER_HITS_H_
#define STTMREC_RECOMMENDER_HITS_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sttmrec::recommender {

struct Centrality {
  double authority = 0.0;
  double hub = 0.0;
  double mean = 0.0;  // (authority + hub) / 2
};

// HITS by power iteration on the directed graph `edges` (from, to), with L2
// normalization after each update, until the largest absolute change drops
// below `tol` or `max_iters` is reached. Duplicate edges count once.
// `extra_nodes` adds nodes without edges; they score zero.
std::map<std::string, Centrality> HitsCentrality(
    const std::vector<std::pair<std::string, std::string>>& edges,
    const std::vector<std::string>& extra_nodes = {}, double tol = 1e-10,
    int max_iters = 1000);

}  // namespace sttmrec::recommender

#endif  // STTMREC_RECOMMENDER_HITS_H_
