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


#include "sttmrec/recommender/constraint_filter.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "sttmrec/common/error.h"
#include "sttmrec/recommender/min_cost_flow.h"

namespace sttmrec::recommender {
namespace {

// Costs are scaled to integers; 2^30 keeps sixteenths exact and leaves room
// for the gate bonus in 64 bits.
constexpr double kCostScale = 1073741824.0;
constexpr int kMaxExactPatterns = 12;

int64_t Scaled(double x) { return std::llround(x * kCostScale); }

double PairPenalty(const AssignmentProblem& p, int u, int f) {
  double pen = 0.0;
  if (p.goal[u] * f >= p.goal_threshold) pen += p.goal[u] - p.goal_threshold;
  if (p.centrality[u] * f >= p.centrality_threshold) {
    pen += p.centrality[u] - p.centrality_threshold;
  }
  return p.alpha_pen * pen;
}

// A gate admits one qualified unit into a discussion for a bonus.
enum class Gate { kGoal, kCentrality, kBoth };

bool Admits(const AssignmentProblem& p, Gate gate, int u) {
  switch (gate) {
    case Gate::kGoal:
      return p.GoalQualified(u);
    case Gate::kCentrality:
      return p.CentralityQualified(u);
    case Gate::kBoth:
      return p.GoalQualified(u) && p.CentralityQualified(u);
  }
  return false;
}

struct FlowOutcome {
  bool feasible = false;
  int failed_discussion = -1;
  Assignment f;
  double objective = 0.0;
};

// One min-cost flow with a fixed gate set per discussion.
FlowOutcome SolveWithGates(const AssignmentProblem& p,
                           const std::vector<std::vector<Gate>>& gates) {
  const int U = p.num_users;
  const int P = static_cast<int>(p.pairs.size());
  const int D = p.num_discussions;
  // Node layout: source, sink, users, pairs, discussions, then gates.
  const int source = 0, sink = 1;
  const int user0 = 2, pair0 = user0 + U, disc0 = pair0 + P;
  int num_nodes = disc0 + D;
  std::vector<std::vector<int>> gate_node(D);
  for (int d = 0; d < D; ++d) {
    for (size_t g = 0; g < gates[d].size(); ++g) {
      gate_node[d].push_back(num_nodes++);
    }
  }

  std::vector<int64_t> pair_cost(P);
  int64_t big = 1;
  for (int i = 0; i < P; ++i) {
    const auto& c = p.pairs[i];
    pair_cost[i] = Scaled(-c.score + PairPenalty(p, c.user, 1) -
                          PairPenalty(p, c.user, 0));
    big += std::abs(pair_cost[i]);
  }
  const int64_t unit_workload = Scaled(p.workload);
  big += static_cast<int64_t>(P) * std::abs(unit_workload) * p.cap;

  MinCostFlow flow(num_nodes);
  for (int u = 0; u < U; ++u) {
    if (p.workload == 0.0) {
      flow.AddArc(source, user0 + u, p.cap, 0);
    } else {
      for (int k = 0; k < p.cap; ++k) {
        flow.AddArc(source, user0 + u, 1, unit_workload * k);
      }
    }
  }
  std::vector<int> pair_arc(P);
  for (int i = 0; i < P; ++i) {
    const auto& c = p.pairs[i];
    pair_arc[i] = flow.AddArc(user0 + c.user, pair0 + i, 1, pair_cost[i]);
    bool gated = false;
    for (size_t g = 0; g < gates[c.discussion].size(); ++g) {
      if (Admits(p, gates[c.discussion][g], c.user)) {
        flow.AddArc(pair0 + i, gate_node[c.discussion][g], 1, 0);
        gated = true;
      }
    }
    if (!gated) flow.AddArc(pair0 + i, disc0 + c.discussion, 1, 0);
  }
  std::vector<std::vector<int>> bonus_arc(D);
  for (int d = 0; d < D; ++d) {
    for (int node : gate_node[d]) {
      bonus_arc[d].push_back(flow.AddArc(node, sink, 1, -big));
      flow.AddArc(node, disc0 + d, P, 0);
    }
    flow.AddArc(disc0 + d, sink, P, 0);
  }
  flow.Solve(source, sink);

  FlowOutcome out;
  out.f.assign(P, 0);
  for (int i = 0; i < P; ++i) out.f[i] = static_cast<int>(flow.Flow(pair_arc[i]));
  out.feasible = true;
  for (int d = 0; d < D && out.feasible; ++d) {
    for (int arc : bonus_arc[d]) {
      if (flow.Flow(arc) != 1) {
        out.feasible = false;
        out.failed_discussion = d;
        break;
      }
    }
  }
  out.objective = EvaluateOb(p, out.f) - WorkloadCost(p, out.f);
  return out;
}

}  // namespace

void AssignmentProblem::Validate() const {
  if (num_users < 0 || num_discussions < 0) {
    throw InputError("assignment: negative sizes");
  }
  if (goal.size() != static_cast<size_t>(num_users) ||
      centrality.size() != static_cast<size_t>(num_users)) {
    throw InputError("assignment: user feature vectors have wrong length");
  }
  if (!discussion_ids.empty() &&
      discussion_ids.size() != static_cast<size_t>(num_discussions)) {
    throw InputError("assignment: discussion id list has wrong length");
  }
  if (cap < 0) throw InputError("assignment: cap must be >= 0");
  if (workload < 0.0) throw InputError("assignment: workload must be >= 0");
  std::map<std::pair<int, int>, int> seen;
  for (const auto& c : pairs) {
    if (c.user < 0 || c.user >= num_users || c.discussion < 0 ||
        c.discussion >= num_discussions) {
      throw InputError("assignment: candidate pair out of range");
    }
    if (!std::isfinite(c.score)) {
      throw InputError("assignment: non-finite score");
    }
    if (++seen[{c.user, c.discussion}] > 1) {
      throw InputError("assignment: duplicate candidate pair");
    }
  }
}

std::string AssignmentProblem::DiscussionName(int d) const {
  return discussion_ids.empty() ? std::to_string(d) : discussion_ids[d];
}

double EvaluateOb(const AssignmentProblem& p, const Assignment& f) {
  if (f.size() != p.pairs.size()) {
    throw InputError("ob: assignment length differs from candidate count");
  }
  double ob = 0.0;
  for (size_t i = 0; i < f.size(); ++i) {
    const auto& c = p.pairs[i];
    ob += f[i] * c.score - PairPenalty(p, c.user, f[i]);
  }
  return ob;
}

double WorkloadCost(const AssignmentProblem& p, const Assignment& f) {
  if (p.workload == 0.0) return 0.0;
  std::vector<long> load(p.num_users, 0);
  for (size_t i = 0; i < f.size(); ++i) load[p.pairs[i].user] += f[i];
  double cost = 0.0;
  for (long k : load) cost += p.workload * k * (k - 1) / 2.0;
  return cost;
}

void CheckAssignment(const AssignmentProblem& p, const Assignment& f) {
  if (f.size() != p.pairs.size()) {
    throw InputError("assignment length differs from candidate count");
  }
  std::vector<int> load(p.num_users, 0);
  std::vector<bool> has_goal(p.num_discussions, false);
  std::vector<bool> has_cent(p.num_discussions, false);
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    const auto& c = p.pairs[i];
    if (++load[c.user] > p.cap) {
      throw InputError("assignment: user " + std::to_string(c.user) +
                       " exceeds the cap");
    }
    if (p.GoalQualified(c.user)) has_goal[c.discussion] = true;
    if (p.CentralityQualified(c.user)) has_cent[c.discussion] = true;
  }
  for (int d = 0; d < p.num_discussions; ++d) {
    if ((p.require_goal && !has_goal[d]) ||
        (p.require_centrality && !has_cent[d])) {
      throw InfeasibleError("discussion " + p.DiscussionName(d) +
                                " has no qualified user assigned",
                            p.DiscussionName(d));
    }
  }
}

FilterResult ConstraintFilter(const AssignmentProblem& p) {
  p.Validate();
  const int D = p.num_discussions;
  std::vector<bool> any_goal(D), any_cent(D), any_both(D), split_pair(D);
  std::vector<std::vector<int>> goal_users(D), cent_users(D);
  for (const auto& c : p.pairs) {
    const bool g = p.GoalQualified(c.user), k = p.CentralityQualified(c.user);
    if (g) goal_users[c.discussion].push_back(c.user);
    if (k) cent_users[c.discussion].push_back(c.user);
    any_both[c.discussion] = any_both[c.discussion] || (g && k);
  }
  for (int d = 0; d < D; ++d) {
    any_goal[d] = !goal_users[d].empty();
    any_cent[d] = !cent_users[d].empty();
    // Two distinct users, one per constraint.
    for (int a : goal_users[d]) {
      for (int b : cent_users[d]) split_pair[d] = split_pair[d] || a != b;
    }
    const char* missing = nullptr;
    if (p.require_goal && !any_goal[d]) missing = "goal quality";
    if (p.require_centrality && !any_cent[d]) missing = "centrality";
    if (missing != nullptr) {
      throw InfeasibleError("discussion " + p.DiscussionName(d) +
                                " has no candidate meeting the " + missing +
                                " threshold",
                            p.DiscussionName(d));
    }
  }

  auto finish = [&](const FlowOutcome& best, bool exact) {
    if (!best.feasible) {
      const std::string name = p.DiscussionName(best.failed_discussion);
      throw InfeasibleError(
          "discussion " + name +
              " cannot receive a qualified user within the caps",
          name);
    }
    CheckAssignment(p, best.f);
    return FilterResult{best.f, best.objective, exact};
  };

  if (!(p.require_goal && p.require_centrality)) {
    std::vector<std::vector<Gate>> gates(D);
    for (int d = 0; d < D; ++d) {
      if (p.require_goal) gates[d].push_back(Gate::kGoal);
      if (p.require_centrality) gates[d].push_back(Gate::kCentrality);
    }
    return finish(SolveWithGates(p, gates), true);
  }

  // Both constraints: a discussion is covered either by one user qualified
  // for both (pattern A) or by two distinct users, one per constraint
  // (pattern B). Fix the pattern where only one is possible and search the
  // rest.
  std::vector<int> open;
  std::vector<std::vector<Gate>> gates(D);
  for (int d = 0; d < D; ++d) {
    if (any_both[d] && split_pair[d]) {
      open.push_back(d);
    } else if (any_both[d]) {
      gates[d] = {Gate::kBoth};
    } else if (split_pair[d]) {
      gates[d] = {Gate::kGoal, Gate::kCentrality};
    } else {
      const std::string name = p.DiscussionName(d);
      throw InfeasibleError(
          "discussion " + name + " cannot meet both thresholds", name);
    }
  }
  auto solve = [&](const std::vector<bool>& split) {
    for (size_t i = 0; i < open.size(); ++i) {
      gates[open[i]] = split[i]
                           ? std::vector<Gate>{Gate::kGoal, Gate::kCentrality}
                           : std::vector<Gate>{Gate::kBoth};
    }
    return SolveWithGates(p, gates);
  };
  auto better = [](const FlowOutcome& a, const FlowOutcome& b) {
    if (a.feasible != b.feasible) return a.feasible;
    return a.feasible && a.objective > b.objective;
  };

  if (open.size() <= static_cast<size_t>(kMaxExactPatterns)) {
    std::vector<bool> split(open.size(), false);
    FlowOutcome best = solve(split);
    for (uint32_t mask = 1; mask < (uint32_t{1} << open.size()); ++mask) {
      for (size_t i = 0; i < open.size(); ++i) split[i] = (mask >> i) & 1;
      FlowOutcome candidate = solve(split);
      if (better(candidate, best)) best = std::move(candidate);
    }
    return finish(best, true);
  }
  // Too many open discussions: single-flip hill climbing from both
  // uniform starts.
  std::vector<FlowOutcome> climbs;
  for (bool start : {false, true}) {
    std::vector<bool> split(open.size(), start);
    FlowOutcome current = solve(split);
    for (bool improved = true; improved;) {
      improved = false;
      for (size_t i = 0; i < split.size(); ++i) {
        split[i] = !split[i];
        FlowOutcome candidate = solve(split);
        if (better(candidate, current)) {
          current = std::move(candidate);
          improved = true;
        } else {
          split[i] = !split[i];
        }
      }
    }
    climbs.push_back(std::move(current));
  }
  const FlowOutcome& best =
      better(climbs[1], climbs[0]) ? climbs[1] : climbs[0];
  return finish(best, false);
}

Assignment BaselineFilter(const AssignmentProblem& p, BaselineMode mode,
                          int top_n, const BaselineThresholds& thresholds) {
  p.Validate();
  std::vector<std::vector<int>> by_discussion(p.num_discussions);
  for (size_t i = 0; i < p.pairs.size(); ++i) {
    by_discussion[p.pairs[i].discussion].push_back(static_cast<int>(i));
  }
  const bool need_goal = mode != BaselineMode::kHighCent;
  const bool need_cent = mode != BaselineMode::kGoalPart;
  Assignment f(p.pairs.size(), 0);
  for (auto& list : by_discussion) {
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      if (p.pairs[a].score != p.pairs[b].score) {
        return p.pairs[a].score > p.pairs[b].score;
      }
      return p.pairs[a].user < p.pairs[b].user;
    });
    for (int k = 0; k < top_n && k < static_cast<int>(list.size()); ++k) {
      const int u = p.pairs[list[k]].user;
      if (need_goal && !(p.goal[u] >= thresholds.min_goal)) continue;
      if (need_cent && !(p.centrality[u] > thresholds.min_centrality)) continue;
      f[list[k]] = 1;
    }
  }
  return f;
}

}  // namespace sttmrec::recommender
