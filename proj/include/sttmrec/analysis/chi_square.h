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

#ifndef STTMREC_ANALYSIS_CHI_SQUARE_H_
#define STTMREC_ANALYSIS_CHI_SQUARE_H_

#include <string>
#include <vector>

namespace sttmrec::analysis {

struct ChiSquareResult {
  double statistic = 0.0;
  int df = 0;
  double p_value = 1.0;
};

// Pearson chi-square test of homogeneity on the 2 x S table formed by two
// per-state count vectors. States with zero counts in both groups are
// dropped before computing df = (#remaining states - 1). No continuity
// correction. Throws InputError on length mismatch or an empty group.
ChiSquareResult PearsonChiSquare(const std::vector<double>& group_a,
                                 const std::vector<double>& group_b);

// Regularized upper incomplete gamma Q(s, x), by series for x < s + 1 and
// a Lentz continued fraction otherwise.
double RegularizedGammaQ(double s, double x);

// P(X > x) for X ~ chi-square(df). df == 0 gives 1 for x <= 0.
double ChiSquareUpperTail(double x, int df);

// "**" for p < 0.01, "*" for p < 0.05, "" otherwise.
std::string SignificanceStars(double p_value);

}  // namespace sttmrec::analysis

#endif  // STTMREC_ANALYSIS_CHI_SQUARE_H_
