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

#include "sttmrec/sttm/model_io.h"

#include <fstream>

#include "sttmrec/common/csv.h"
#include "sttmrec/common/error.h"

namespace sttmrec::sttm {

using nlohmann::json;

namespace {

json CountsToJson(const CountTables<int>& c) {
  return json{{"shape",
               {{"S", c.S}, {"A", c.A}, {"Z", c.Z}, {"D", c.D}, {"V", c.V},
                {"timepoints", c.num_timepoints}}},
              {"zw", c.zw},
              {"sd", c.sd},
              {"sz", c.sz},
              {"sas", c.sas},
              {"mtz", c.mtz}};
}

}  // namespace

json ModelToJson(const SttmModel& model, const json& meta) {
  return json{{"schema_version", kModelSchemaVersion},
              {"meta", meta},
              {"hyperparams", model.hyperparams()},
              {"seed", model.seed()},
              {"sequences", model.data()},
              {"topics", model.topics()},
              {"states", model.states()},
              {"counts", CountsToJson(model.counts())}};
}

SttmModel ModelFromJson(const json& j) {
  try {
    const int version = j.at("schema_version").get<int>();
    if (version != kModelSchemaVersion) {
      throw InputError("unsupported model schema_version " +
                       std::to_string(version));
    }
    const auto h = j.at("hyperparams").get<Hyperparams>();
    const auto data = j.at("sequences").get<corpus::SequenceSet>();
    corpus::ValidateSequenceSet(data);
    SttmModel model = SttmModel::FromAssignments(
        data, h, j.at("seed").get<uint64_t>(),
        j.at("topics").get<std::vector<int>>(),
        j.at("states").get<std::vector<int>>());
    if (j.contains("counts") && j.at("counts") != CountsToJson(model.counts())) {
      throw InputError("stored counts disagree with the assignments");
    }
    return model;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed model JSON: ") + e.what());
  }
}

json ProfilesToJson(const StateProfiles& profiles, const json& meta) {
  json j = profiles;
  j["meta"] = meta;
  return j;
}

StateProfiles ProfilesFromJson(const json& j) {
  try {
    auto p = j.get<StateProfiles>();
    p.Validate(1e-6);
    return p;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed profiles JSON: ") + e.what());
  }
}

json ReadJsonFile(const std::string& path) {
  const std::string text = ReadFileOrThrow(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void WriteJsonFile(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw InputError("failed writing " + path);
}

}  // namespace sttmrec::sttm
