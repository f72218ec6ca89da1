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


#ifndef STTMREC_RECOMMENDER_CONSTRAINT_FILTER_H_
#define STTMREC_RECOMMENDER_CONSTRAINT_FILTER_H_

#include <string>
#include <vector>

namespace sttmrec::recommender {

struct CandidatePair {
  int user = 0;
  int discussion = 0;
  double score = 0.0;  // predicted relevance r_{u,d}
};

// One constrained assignment instance. Users and discussions are dense
// indices; `discussion_ids` (optional) names discussions in errors.
struct AssignmentProblem {
  int num_users = 0;
  int num_discussions = 0;
  std::vector<std::string> discussion_ids;
  std::vector<CandidatePair> pairs;
  std::vector<double> goal;        // G_u, goal quality in {0, 1, 2}
  std::vector<double> centrality;  // C_u
  double goal_threshold = 1.0;
  double centrality_threshold = 0.1;
  bool require_goal = false;
  bool require_centrality = false;
  double alpha_pen = 0.1;
  int cap = 5;
  // Unit costs 0, w, 2w, ... on each user's assignments; 0 disables.
  double workload = 0.0;

  // Throws InputError on inconsistent sizes or out-of-range indices.
  void Validate() const;
  std::string DiscussionName(int d) const;
  bool GoalQualified(int u) const { return goal[u] >= goal_threshold; }
  bool CentralityQualified(int u) const {
    return centrality[u] >= centrality_threshold;
  }
};

// f[p] in {0, 1} per candidate pair.
using Assignment = std::vector<int>;

// Relevance minus the qualification penalties, summed over candidate pairs
// exactly as written: each pair contributes
//   f * r - alpha * 1(G_u * f >= G) * (G_u - G) - alpha * 1(C_u * f >= C) * (C_u - C).
// Both penalty terms are always scored; constraints are not enforced.
double EvaluateOb(const AssignmentProblem& problem, const Assignment& f);

// Sum over users of w * k * (k - 1) / 2 for k assignments.
double WorkloadCost(const AssignmentProblem& problem, const Assignment& f);

// Throws InfeasibleError naming the first discussion that lacks a required
// qualified user, or InputError if a user exceeds the cap.
void CheckAssignment(const AssignmentProblem& problem, const Assignment& f);

struct FilterResult {
  Assignment f;
  double objective = 0.0;  // EvaluateOb - WorkloadCost
  bool exact = true;       // false if the pattern search fell back to greedy
};

// Maximizes EvaluateOb - WorkloadCost subject to the enabled existence
// constraints and per-user caps, via min-cost flow. Throws InfeasibleError
// naming a discussion when no feasible assignment exists.
FilterResult ConstraintFilter(const AssignmentProblem& problem);

enum class BaselineMode { kGoalPart, kHighCent, kGoalPartHighCent };

struct BaselineThresholds {
  double min_goal = 1.0;        // GoalPart keeps G_u >= min_goal
  double min_centrality = 0.1;  // HighCent keeps C_u > min_centrality
};

// Top `top_n` candidates per discussion by score (ties by user index), then
// drops users that fail the mode's filter. Ignores caps.
Assignment BaselineFilter(const AssignmentProblem& problem, BaselineMode mode,
                          int top_n, const BaselineThresholds& thresholds = {});

}  // namespace sttmrec::recommender

#endif  // STTMREC_RECOMMENDER_CONSTRAINT_FILTER_H_
