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

#ifndef STTMREC_STTM_COUNTS_H_
#define STTMREC_STTM_COUNTS_H_

#include <vector>

namespace sttmrec::sttm {

// Sufficient statistics of the sampler. Transition tables have S + 1 source
// rows: rows 0..S-1 are states, row S is the virtual start state whose
// per-category row gives the initial-state counts.
template <typename T>
struct CountTables {
  int S = 0, A = 0, Z = 0, D = 0, V = 0;
  int num_timepoints = 0;

  std::vector<T> zw;         // Z x V: words w assigned topic j
  std::vector<T> z_total;    // Z
  std::vector<T> sd;         // S x D: documents of type k in state c
  std::vector<T> sd_total;   // S
  std::vector<T> sz;         // S x Z: words assigned topic j in state c
  std::vector<T> sz_total;   // S
  std::vector<T> sas;        // (S+1) x A x S: transitions c -a-> c'
  std::vector<T> sas_total;  // (S+1) x A
  std::vector<T> mtz;        // timepoints x Z: words assigned j at (m, t)

  void Resize(int s, int a, int z, int d, int v, int timepoints) {
    S = s, A = a, Z = z, D = d, V = v, num_timepoints = timepoints;
    zw.assign(static_cast<size_t>(Z) * V, T{});
    z_total.assign(Z, T{});
    sd.assign(static_cast<size_t>(S) * D, T{});
    sd_total.assign(S, T{});
    sz.assign(static_cast<size_t>(S) * Z, T{});
    sz_total.assign(S, T{});
    sas.assign(static_cast<size_t>(S + 1) * A * S, T{});
    sas_total.assign(static_cast<size_t>(S + 1) * A, T{});
    mtz.assign(static_cast<size_t>(timepoints) * Z, T{});
  }

  int StartRow() const { return S; }
  size_t ZW(int j, int w) const { return static_cast<size_t>(j) * V + w; }
  size_t SD(int c, int k) const { return static_cast<size_t>(c) * D + k; }
  size_t SZ(int c, int j) const { return static_cast<size_t>(c) * Z + j; }
  size_t Row(int from, int a) const { return static_cast<size_t>(from) * A + a; }
  size_t SAS(int from, int a, int to) const { return Row(from, a) * S + to; }
  size_t MTZ(int p, int j) const { return static_cast<size_t>(p) * Z + j; }

  // Adds `other` scaled by `weight` (used to average snapshots).
  template <typename U>
  void Accumulate(const CountTables<U>& other, T weight) {
    auto add = [weight](std::vector<T>& dst, const std::vector<U>& src) {
      for (size_t i = 0; i < dst.size(); ++i) dst[i] += weight * src[i];
    };
    add(zw, other.zw);
    add(z_total, other.z_total);
    add(sd, other.sd);
    add(sd_total, other.sd_total);
    add(sz, other.sz);
    add(sz_total, other.sz_total);
    add(sas, other.sas);
    add(sas_total, other.sas_total);
    add(mtz, other.mtz);
  }

  bool operator==(const CountTables&) const = default;
};

}  // namespace sttmrec::sttm

#endif  // STTMREC_STTM_COUNTS_H_
