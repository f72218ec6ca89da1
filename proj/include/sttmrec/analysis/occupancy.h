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

#ifndef STTMREC_ANALYSIS_OCCUPANCY_H_
#define STTMREC_ANALYSIS_OCCUPANCY_H_

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "sttmrec/analysis/chi_square.h"

namespace sttmrec::analysis {

inline constexpr int kNumGroups = 4;
// Column headers in order: S1+S2, S3+S4, S5+S6, S7.
const std::array<std::string, kNumGroups>& GroupNames();

// User-weeks per (state, connection group).
struct OccupancyTable {
  std::vector<std::array<long, kNumGroups>> counts;  // [state][group]

  int num_states() const { return static_cast<int>(counts.size()); }
  long GroupTotal(int group) const;
  // Per-column proportions; a column with no user-weeks is all zeros.
  std::vector<std::array<double, kNumGroups>> Proportions() const;
  std::vector<double> Column(int group) const;
};

// Tallies decoded state paths against per-step social categories (S1 = 0).
// Throws InputError on mismatched lengths or out-of-range values.
OccupancyTable BuildOccupancy(const std::vector<std::vector<int>>& paths,
                              const std::vector<std::vector<int>>& social,
                              int num_states);

struct GroupTest {
  std::string label;  // e.g. "GS vs GP"
  bool computed = false;  // false when either group has no user-weeks
  ChiSquareResult result;
  std::string stars;
};

// GS compared pairwise with GP, GB and NO.
std::vector<GroupTest> PairwiseGroupTests(const OccupancyTable& table);

// CSV: state (1-based), then count and proportion per group; the
// chi-square rows follow as "test,statistic,df,p_value,stars".
void WriteOccupancyCsv(std::ostream& out, const OccupancyTable& table,
                       const std::vector<GroupTest>& tests);

}  // namespace sttmrec::analysis

#endif  // STTMREC_ANALYSIS_OCCUPANCY_H_
