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

#include "sttmrec/analysis/chi_square.h"

#include <cmath>
#include <limits>

#include "sttmrec/common/error.h"

namespace sttmrec::analysis {
namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxIter = 10000;

// P(s, x) by the power series; valid for x < s + 1.
double GammaPSeries(double s, double x) {
  double term = 1.0 / s;
  double sum = term;
  for (int n = 1; n < kMaxIter; ++n) {
    term *= x / (s + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) break;
  }
  return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

// Q(s, x) by the continued fraction (modified Lentz); valid for x >= s + 1.
double GammaQContinuedFraction(double s, double x) {
  constexpr double kTiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - s;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return std::exp(-x + s * std::log(x) - std::lgamma(s)) * h;
}

}  // namespace

double RegularizedGammaQ(double s, double x) {
  if (!(s > 0.0)) throw InputError("gamma shape must be positive");
  if (x <= 0.0) return 1.0;
  if (x < s + 1.0) return 1.0 - GammaPSeries(s, x);
  return GammaQContinuedFraction(s, x);
}

double ChiSquareUpperTail(double x, int df) {
  if (df < 0) throw InputError("negative degrees of freedom");
  if (df == 0) return x > 0.0 ? 0.0 : 1.0;
  return RegularizedGammaQ(0.5 * df, 0.5 * x);
}

ChiSquareResult PearsonChiSquare(const std::vector<double>& group_a,
                                 const std::vector<double>& group_b) {
  if (group_a.size() != group_b.size()) {
    throw InputError("chi-square groups differ in length");
  }
  double total_a = 0.0, total_b = 0.0;
  for (size_t i = 0; i < group_a.size(); ++i) {
    if (group_a[i] < 0.0 || group_b[i] < 0.0) {
      throw InputError("chi-square counts must be nonnegative");
    }
    total_a += group_a[i];
    total_b += group_b[i];
  }
  if (total_a <= 0.0 || total_b <= 0.0) {
    throw InputError("chi-square group with zero total");
  }
  const double total = total_a + total_b;
  ChiSquareResult r;
  int kept = 0;
  for (size_t i = 0; i < group_a.size(); ++i) {
    const double row = group_a[i] + group_b[i];
    if (row == 0.0) continue;
    ++kept;
    const double ea = row * total_a / total;
    const double eb = row * total_b / total;
    r.statistic += (group_a[i] - ea) * (group_a[i] - ea) / ea;
    r.statistic += (group_b[i] - eb) * (group_b[i] - eb) / eb;
  }
  r.df = kept > 0 ? kept - 1 : 0;
  r.p_value = ChiSquareUpperTail(r.statistic, r.df);
  return r;
}

std::string SignificanceStars(double p_value) {
  if (p_value < 0.01) return "**";
  if (p_value < 0.05) return "*";
  return "";
}

}  // namespace sttmrec::analysis
