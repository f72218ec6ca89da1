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


#include "sttmrec/analysis/transition_graph.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "sttmrec/common/error.h"

namespace sttmrec::analysis {
namespace {

TransitionGraph Empty(int num_states, int category) {
  TransitionGraph g;
  g.category = category;
  g.visits.assign(num_states, 0);
  g.start.assign(num_states, 0);
  g.edges.assign(num_states, std::vector<long>(num_states, 0));
  return g;
}

void FillVisits(TransitionGraph& g) {
  const int S = g.num_states();
  for (int to = 0; to < S; ++to) {
    g.visits[to] = g.start[to];
    for (int from = 0; from < S; ++from) g.visits[to] += g.edges[from][to];
  }
}

std::string Format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

// Light gray for rare edges, black for the most frequent one.
std::string EdgeStyle(long count, long max_count) {
  const double f = max_count > 0 ? static_cast<double>(count) / max_count : 0;
  const double penwidth = 0.5 + 5.5 * f;
  const int gray = static_cast<int>(std::lround(80.0 * (1.0 - std::max(f, 0.1))));
  return "[label=\"" + std::to_string(count) +
         "\", penwidth=" + Format("%.3f", penwidth) + ", color=\"gray" +
         std::to_string(gray) + "\"]";
}

std::string Escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

TransitionGraph BuildTransitionGraph(
    const std::vector<std::vector<int>>& paths,
    const std::vector<std::vector<int>>& social, int num_states,
    int num_social, int category) {
  if (category < 0 || category >= num_social) {
    throw InputError("transition graph: unknown category " +
                     std::to_string(category + 1));
  }
  if (paths.size() != social.size()) {
    throw InputError("transition graph: path and category lists differ");
  }
  if (num_states < 1) throw InputError("transition graph: no states");
  TransitionGraph g = Empty(num_states, category);
  for (size_t m = 0; m < paths.size(); ++m) {
    const auto& path = paths[m];
    if (path.size() != social[m].size()) {
      throw InputError("transition graph: sequence " + std::to_string(m) +
                       " has mismatched lengths");
    }
    for (size_t t = 0; t < path.size(); ++t) {
      if (path[t] < 0 || path[t] >= num_states || social[m][t] < 0 ||
          social[m][t] >= num_social) {
        throw InputError("transition graph: value out of range in sequence " +
                         std::to_string(m));
      }
      if (t == 0) {
        if (social[m][0] == category) ++g.start[path[0]];
      } else if (social[m][t - 1] == category) {
        ++g.edges[path[t - 1]][path[t]];
      }
    }
  }
  FillVisits(g);
  return g;
}

TransitionGraph TransitionGraphFromCounts(const sttm::CountTables<int>& n,
                                          int category) {
  if (category < 0 || category >= n.A) {
    throw InputError("transition graph: unknown category " +
                     std::to_string(category + 1));
  }
  TransitionGraph g = Empty(n.S, category);
  for (int to = 0; to < n.S; ++to) {
    g.start[to] = n.sas[n.SAS(n.StartRow(), category, to)];
    for (int from = 0; from < n.S; ++from) {
      g.edges[from][to] = n.sas[n.SAS(from, category, to)];
    }
  }
  FillVisits(g);
  return g;
}

std::string ToDot(const TransitionGraph& g, const std::string& title) {
  const int S = g.num_states();
  long max_visits = 0;
  long max_edge = 0;
  for (int c = 0; c < S; ++c) {
    max_visits = std::max(max_visits, g.visits[c]);
    max_edge = std::max(max_edge, g.start[c]);
    for (long e : g.edges[c]) max_edge = std::max(max_edge, e);
  }
  std::string dot = "digraph \"" + Escape(title) + "\" {\n";
  dot += "  label=\"" + Escape(title) + "\";\n";
  dot += "  node [shape=circle, fixedsize=true];\n";
  dot += "  start [shape=point, width=0.1, label=\"\"];\n";
  for (int c = 0; c < S; ++c) {
    const double f =
        max_visits > 0 ? static_cast<double>(g.visits[c]) / max_visits : 0.0;
    dot += "  s" + std::to_string(c + 1) + " [label=\"" +
           std::to_string(c + 1) + "\", width=" +
           Format("%.3f", 0.25 + 1.25 * std::sqrt(f)) +
           ", visits=" + std::to_string(g.visits[c]) + "];\n";
  }
  for (int c = 0; c < S; ++c) {
    if (g.start[c] == 0) continue;
    dot += "  start -> s" + std::to_string(c + 1) + " " +
           EdgeStyle(g.start[c], max_edge) + ";\n";
  }
  for (int from = 0; from < S; ++from) {
    for (int to = 0; to < S; ++to) {
      if (g.edges[from][to] == 0) continue;
      dot += "  s" + std::to_string(from + 1) + " -> s" +
             std::to_string(to + 1) + " " +
             EdgeStyle(g.edges[from][to], max_edge) + ";\n";
    }
  }
  dot += "}\n";
  return dot;
}

}  // namespace sttmrec::analysis
