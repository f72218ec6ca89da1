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


#ifndef STTMREC_CLI_COMMANDS_H_
#define STTMREC_CLI_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "sttmrec/common/config.h"

namespace sttmrec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitInternal = 4;

// Version string stamped into every artifact.
const char* ToolVersion();

// Hex FNV-1a of the canonical config with the output directory removed, so
// the same run written to two places carries the same hash.
std::string ConfigHash(const Config& config);

// {"tool", "version", "config_hash", "seed"}.
nlohmann::json ArtifactMeta(const Config& config);

// Subcommands. Each reads its inputs from `config`, writes artifacts under
// config "out" and a short summary to `log`. Errors propagate as
// InputError / InfeasibleError.
void CmdTrain(const Config& config, std::ostream& log);
void CmdAnalyze(const Config& config, std::ostream& log);
void CmdRecommend(const Config& config, std::ostream& log);
void CmdSynth(const Config& config, std::ostream& log);

// Parses argv, merges the config file with flag overrides (flags win),
// dispatches and maps failures to exit codes.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace sttmrec::cli

#endif  // STTMREC_CLI_COMMANDS_H_
