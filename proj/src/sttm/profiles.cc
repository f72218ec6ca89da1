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

#include "sttmrec/sttm/profiles.h"

#include <cmath>

#include "sttmrec/common/error.h"

namespace sttmrec::sttm {
namespace {

template <typename T>
std::vector<double> SmoothRow(const T* counts, int len, double conc) {
  std::vector<double> row(len);
  double total = 0.0;
  for (int i = 0; i < len; ++i) {
    row[i] = static_cast<double>(counts[i]) + conc;
    total += row[i];
  }
  for (double& x : row) x /= total;
  return row;
}

void CheckRow(const std::vector<double>& row, size_t expected_len,
              double tol, const char* what) {
  if (row.size() != expected_len) {
    throw InputError(std::string(what) + ": row has wrong length");
  }
  double total = 0.0;
  for (double x : row) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw InputError(std::string(what) + ": entry outside [0, 1]");
    }
    total += x;
  }
  if (std::abs(total - 1.0) > tol) {
    throw InputError(std::string(what) + ": row does not sum to 1");
  }
}

}  // namespace

void StateProfiles::Validate(double tol) const {
  const size_t S = theta.size();
  const size_t Z = phi.size();
  if (S == 0 || Z == 0) throw InputError("profiles: no states or topics");
  if (psi.size() != S || pi.size() != S) {
    throw InputError("profiles: per-state tables disagree on S");
  }
  const size_t V = phi[0].size();
  if (!vocabulary.empty() && vocabulary.size() != V) {
    throw InputError("profiles: vocabulary size does not match phi");
  }
  for (const auto& row : phi) CheckRow(row, V, tol, "phi");
  for (const auto& row : theta) CheckRow(row, Z, tol, "theta");
  const size_t D = psi[0].size();
  for (const auto& row : psi) CheckRow(row, D, tol, "psi");
  const size_t A = init.size();
  for (const auto& row : init) CheckRow(row, S, tol, "init");
  for (const auto& rows : pi) {
    if (rows.size() != A) throw InputError("pi: wrong social dimension");
    for (const auto& row : rows) CheckRow(row, S, tol, "pi");
  }
  for (const auto& seq : theta_doc) {
    for (const auto& row : seq) CheckRow(row, Z, tol, "theta_doc");
  }
}

template <typename T>
StateProfiles EstimateProfiles(const CountTables<T>& n, const Hyperparams& h,
                               const std::vector<int>& steps_per_sequence,
                               const std::vector<std::string>& vocabulary) {
  StateProfiles p;
  p.vocabulary = vocabulary;
  for (int j = 0; j < n.Z; ++j) {
    p.phi.push_back(SmoothRow(&n.zw[n.ZW(j, 0)], n.V, h.beta));
  }
  for (int c = 0; c < n.S; ++c) {
    p.theta.push_back(SmoothRow(&n.sz[n.SZ(c, 0)], n.Z, h.alpha));
    p.psi.push_back(SmoothRow(&n.sd[n.SD(c, 0)], n.D, h.nu));
    Matrix rows;
    for (int a = 0; a < n.A; ++a) {
      rows.push_back(SmoothRow(&n.sas[n.SAS(c, a, 0)], n.S, h.gamma));
    }
    p.pi.push_back(std::move(rows));
  }
  for (int a = 0; a < n.A; ++a) {
    p.init.push_back(SmoothRow(&n.sas[n.SAS(n.StartRow(), a, 0)], n.S, h.gamma));
  }
  int tp = 0;
  for (int steps : steps_per_sequence) {
    Matrix seq;
    for (int t = 0; t < steps; ++t, ++tp) {
      seq.push_back(SmoothRow(&n.mtz[n.MTZ(tp, 0)], n.Z, h.alpha));
    }
    p.theta_doc.push_back(std::move(seq));
  }
  return p;
}

template StateProfiles EstimateProfiles<int>(const CountTables<int>&,
                                             const Hyperparams&,
                                             const std::vector<int>&,
                                             const std::vector<std::string>&);
template StateProfiles EstimateProfiles<double>(
    const CountTables<double>&, const Hyperparams&, const std::vector<int>&,
    const std::vector<std::string>&);

void to_json(nlohmann::json& j, const StateProfiles& p) {
  j = {{"phi", p.phi},     {"theta", p.theta}, {"psi", p.psi},
       {"pi", p.pi},       {"init", p.init},   {"theta_doc", p.theta_doc},
       {"vocabulary", p.vocabulary}};
}

void from_json(const nlohmann::json& j, StateProfiles& p) {
  p.phi = j.at("phi").get<Matrix>();
  p.theta = j.at("theta").get<Matrix>();
  p.psi = j.at("psi").get<Matrix>();
  p.pi = j.at("pi").get<std::vector<Matrix>>();
  p.init = j.at("init").get<Matrix>();
  p.theta_doc = j.value("theta_doc", std::vector<Matrix>{});
  p.vocabulary = j.value("vocabulary", std::vector<std::string>{});
}

}  // namespace sttmrec::sttm
