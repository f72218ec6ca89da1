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

#ifndef STTMREC_STTM_MODEL_IO_H_
#define STTMREC_STTM_MODEL_IO_H_

#include <string>

#include "json.hpp"
#include "sttmrec/sttm/model.h"
#include "sttmrec/sttm/profiles.h"

namespace sttmrec::sttm {

inline constexpr int kModelSchemaVersion = 1;

// model.json: schema version, hyperparameters, seed, sequences, final
// assignments and count tables. `meta` is embedded verbatim.
nlohmann::json ModelToJson(const SttmModel& model, const nlohmann::json& meta);

// Rebuilds a model and checks the stored counts against a fresh tally.
// Throws InputError on schema mismatch or inconsistent counts.
SttmModel ModelFromJson(const nlohmann::json& j);

nlohmann::json ProfilesToJson(const StateProfiles& profiles,
                              const nlohmann::json& meta);
StateProfiles ProfilesFromJson(const nlohmann::json& j);

// Reads and parses a JSON file; InputError names the path on failure.
nlohmann::json ReadJsonFile(const std::string& path);

// Writes `j` with two-space indentation and a trailing newline.
void WriteJsonFile(const std::string& path, const nlohmann::json& j);

}  // namespace sttmrec::sttm

#endif  // STTMREC_STTM_MODEL_IO_H_
