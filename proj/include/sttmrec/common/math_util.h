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

#ifndef STTMREC_COMMON_MATH_UTIL_H_
#define STTMREC_COMMON_MATH_UTIL_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace sttmrec {

// log(Gamma(x + n) / Gamma(x)) for x > 0, n >= 0. Small n uses the rising
// factorial product, which is exact to rounding and reentrant.
double LogRisingFactorial(double x, double n);

// log(sum(exp(values))).
double LogSumExp(std::span<const double> values);

// Normalizes log-weights into probabilities in place.
void NormalizeLogWeights(std::vector<double>& log_weights);

// Total-variation distance between two distributions of equal length.
double TotalVariation(std::span<const double> p, std::span<const double> q);

// 64-bit FNV-1a.
uint64_t Fnv1a64(std::string_view data);

}  // namespace sttmrec

#endif  // STTMREC_COMMON_MATH_UTIL_H_
