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

#include "sttmrec/common/math_util.h"

#include <math.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace sttmrec {

double LogRisingFactorial(double x, double n) {
  if (n == 0.0) return 0.0;
  const double rounded = std::round(n);
  if (rounded == n && n <= 64.0) {
    double acc = 0.0;
    for (int i = 0; i < static_cast<int>(n); ++i) acc += std::log(x + i);
    return acc;
  }
  // lgamma_r does not touch the global signgam, so chains can run in
  // parallel.
  int sign = 0;
  return ::lgamma_r(x + n, &sign) - ::lgamma_r(x, &sign);
}

double LogSumExp(std::span<const double> values) {
  if (values.empty()) return -std::numeric_limits<double>::infinity();
  const double max = *std::max_element(values.begin(), values.end());
  if (!std::isfinite(max)) return max;
  double acc = 0.0;
  for (double v : values) acc += std::exp(v - max);
  return max + std::log(acc);
}

void NormalizeLogWeights(std::vector<double>& log_weights) {
  const double lse = LogSumExp(log_weights);
  for (double& w : log_weights) w = std::exp(w - lse);
}

double TotalVariation(std::span<const double> p, std::span<const double> q) {
  double acc = 0.0;
  for (size_t i = 0; i < p.size(); ++i) acc += std::abs(p[i] - q[i]);
  return 0.5 * acc;
}

uint64_t Fnv1a64(std::string_view data) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace sttmrec
