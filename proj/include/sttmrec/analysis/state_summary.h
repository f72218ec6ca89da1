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


#ifndef STTMREC_ANALYSIS_STATE_SUMMARY_H_
#define STTMREC_ANALYSIS_STATE_SUMMARY_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "sttmrec/sttm/profiles.h"

namespace sttmrec::analysis {

struct TopicSummary {
  int topic = 0;
  double weight = 0.0;  // theta[state][topic]
  std::vector<std::string> words;
};

struct StateSummaryRow {
  int state = 0;
  std::vector<TopicSummary> topics;  // by descending weight
  std::vector<double> psi;
};

// Per state: the `top_topics` heaviest topics under theta and each topic's
// `top_k` most probable words. Ties go to the lower index. Words fall back
// to "w<index>" when the profiles carry no vocabulary.
std::vector<StateSummaryRow> StateSummary(const sttm::StateProfiles& profiles,
                                          int top_k, int top_topics = 3);

// CSV with one row per state: state, topics, then psi per document type
// rounded to two decimals. The topics cell reads "z2:0.41 a b c | z0:...".
// `doc_type_names` labels the psi columns; "d<index>" when empty.
void WriteStateSummaryCsv(std::ostream& out,
                          const std::vector<StateSummaryRow>& rows,
                          const std::vector<std::string>& doc_type_names);

}  // namespace sttmrec::analysis

#endif  // STTMREC_ANALYSIS_STATE_SUMMARY_H_
