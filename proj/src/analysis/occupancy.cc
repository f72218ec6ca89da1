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

#include "sttmrec/analysis/occupancy.h"

#include <cstdio>
#include <ostream>

#include "sttmrec/common/csv.h"
#include "sttmrec/common/error.h"
#include "sttmrec/corpus/categories.h"

namespace sttmrec::analysis {
namespace {

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace

const std::array<std::string, kNumGroups>& GroupNames() {
  static const std::array<std::string, kNumGroups> names = {"GS", "GP", "GB",
                                                            "NO"};
  return names;
}

long OccupancyTable::GroupTotal(int group) const {
  long total = 0;
  for (const auto& row : counts) total += row[group];
  return total;
}

std::vector<double> OccupancyTable::Column(int group) const {
  std::vector<double> col;
  for (const auto& row : counts) col.push_back(static_cast<double>(row[group]));
  return col;
}

std::vector<std::array<double, kNumGroups>> OccupancyTable::Proportions()
    const {
  std::vector<std::array<double, kNumGroups>> out(counts.size());
  for (int g = 0; g < kNumGroups; ++g) {
    const long total = GroupTotal(g);
    for (size_t c = 0; c < counts.size(); ++c) {
      out[c][g] = total == 0 ? 0.0 : static_cast<double>(counts[c][g]) / total;
    }
  }
  return out;
}

OccupancyTable BuildOccupancy(const std::vector<std::vector<int>>& paths,
                              const std::vector<std::vector<int>>& social,
                              int num_states) {
  if (paths.size() != social.size()) {
    throw InputError("occupancy: path and category lists differ in length");
  }
  if (num_states < 1) throw InputError("occupancy: need at least one state");
  OccupancyTable table;
  table.counts.assign(num_states, {});
  for (size_t m = 0; m < paths.size(); ++m) {
    if (paths[m].size() != social[m].size()) {
      throw InputError("occupancy: sequence " + std::to_string(m) +
                       " has mismatched state and category lengths");
    }
    for (size_t t = 0; t < paths[m].size(); ++t) {
      const int c = paths[m][t];
      const int a = social[m][t];
      if (c < 0 || c >= num_states) throw InputError("occupancy: bad state");
      if (a < 0 || a >= corpus::kNumSocialCategories) {
        throw InputError("occupancy: bad social category");
      }
      ++table.counts[c][corpus::ConnectionGroup(
          static_cast<corpus::SocialCategory>(a))];
    }
  }
  return table;
}

std::vector<GroupTest> PairwiseGroupTests(const OccupancyTable& table) {
  std::vector<GroupTest> tests;
  const auto& names = GroupNames();
  for (int g = 1; g < kNumGroups; ++g) {
    GroupTest t;
    t.label = names[0] + " vs " + names[g];
    if (table.GroupTotal(0) > 0 && table.GroupTotal(g) > 0) {
      t.computed = true;
      t.result = PearsonChiSquare(table.Column(0), table.Column(g));
      t.stars = SignificanceStars(t.result.p_value);
    }
    tests.push_back(t);
  }
  return tests;
}

void WriteOccupancyCsv(std::ostream& out, const OccupancyTable& table,
                       const std::vector<GroupTest>& tests) {
  std::vector<std::string> header = {"state"};
  for (const auto& g : GroupNames()) header.push_back(g);
  for (const auto& g : GroupNames()) header.push_back(g + "_prop");
  WriteCsvRow(out, header);
  const auto props = table.Proportions();
  for (int c = 0; c < table.num_states(); ++c) {
    std::vector<std::string> row = {std::to_string(c + 1)};
    for (int g = 0; g < kNumGroups; ++g) {
      row.push_back(std::to_string(table.counts[c][g]));
    }
    for (int g = 0; g < kNumGroups; ++g) row.push_back(Fixed(props[c][g], 4));
    WriteCsvRow(out, row);
  }
  out << '\n';
  WriteCsvRow(out, {"test", "statistic", "df", "p_value", "stars"});
  for (const auto& t : tests) {
    if (!t.computed) {
      WriteCsvRow(out, {t.label, "", "", "", ""});
      continue;
    }
    WriteCsvRow(out, {t.label, Fixed(t.result.statistic, 6),
                      std::to_string(t.result.df), Fixed(t.result.p_value, 6),
                      t.stars});
  }
}

}  // namespace sttmrec::analysis
