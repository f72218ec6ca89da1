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


#include "sttmrec/analysis/state_summary.h"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "sttmrec/common/csv.h"
#include "sttmrec/common/error.h"

namespace sttmrec::analysis {
namespace {

std::vector<int> TopIndices(const std::vector<double>& row, int k) {
  std::vector<int> idx(row.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return row[a] > row[b]; });
  idx.resize(std::min<size_t>(idx.size(), std::max(k, 0)));
  return idx;
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace

std::vector<StateSummaryRow> StateSummary(const sttm::StateProfiles& profiles,
                                          int top_k, int top_topics) {
  if (top_k < 1 || top_topics < 1) {
    throw InputError("state summary: top_k and top_topics must be >= 1");
  }
  std::vector<StateSummaryRow> rows;
  for (int c = 0; c < profiles.num_states(); ++c) {
    StateSummaryRow row;
    row.state = c;
    row.psi = profiles.psi[c];
    for (int j : TopIndices(profiles.theta[c], top_topics)) {
      TopicSummary topic;
      topic.topic = j;
      topic.weight = profiles.theta[c][j];
      for (int w : TopIndices(profiles.phi[j], top_k)) {
        topic.words.push_back(w < static_cast<int>(profiles.vocabulary.size())
                                  ? profiles.vocabulary[w]
                                  : "w" + std::to_string(w));
      }
      row.topics.push_back(std::move(topic));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void WriteStateSummaryCsv(std::ostream& out,
                          const std::vector<StateSummaryRow>& rows,
                          const std::vector<std::string>& doc_type_names) {
  const size_t D = rows.empty() ? doc_type_names.size() : rows[0].psi.size();
  std::vector<std::string> header = {"state", "topics"};
  for (size_t d = 0; d < D; ++d) {
    header.push_back(d < doc_type_names.size() ? doc_type_names[d]
                                                : "d" + std::to_string(d));
  }
  WriteCsvRow(out, header);
  for (const auto& row : rows) {
    std::string topics;
    for (const auto& t : row.topics) {
      if (!topics.empty()) topics += " | ";
      topics += "z" + std::to_string(t.topic) + ":" + Fixed(t.weight, 2);
      for (const auto& w : t.words) topics += " " + w;
    }
    std::vector<std::string> fields = {std::to_string(row.state + 1), topics};
    for (double x : row.psi) fields.push_back(Fixed(x, 2));
    WriteCsvRow(out, fields);
  }
}

}  // namespace sttmrec::analysis
