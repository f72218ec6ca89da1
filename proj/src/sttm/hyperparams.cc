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

#include "sttmrec/sttm/hyperparams.h"

#include <cmath>

#include "sttmrec/common/error.h"

namespace sttmrec::sttm {

void Hyperparams::Validate() const {
  if (num_states < 1 || num_social < 1 || num_topics < 1 ||
      num_doc_types < 1) {
    throw InputError("hyperparameter counts (S, A, Z, D) must all be >= 1");
  }
  for (double c : {alpha, beta, nu, gamma}) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw InputError("Dirichlet concentrations must be finite and > 0");
    }
  }
}

void to_json(nlohmann::json& j, const Hyperparams& h) {
  j = {{"S", h.num_states}, {"A", h.num_social},   {"Z", h.num_topics},
       {"D", h.num_doc_types}, {"alpha", h.alpha}, {"beta", h.beta},
       {"nu", h.nu},         {"gamma", h.gamma}};
}

void from_json(const nlohmann::json& j, Hyperparams& h) {
  h.num_states = j.at("S").get<int>();
  h.num_social = j.at("A").get<int>();
  h.num_topics = j.at("Z").get<int>();
  h.num_doc_types = j.at("D").get<int>();
  h.alpha = j.at("alpha").get<double>();
  h.beta = j.at("beta").get<double>();
  h.nu = j.at("nu").get<double>();
  h.gamma = j.at("gamma").get<double>();
}

}  // namespace sttmrec::sttm
