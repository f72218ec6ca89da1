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

#ifndef STTMREC_COMMON_ERROR_H_
#define STTMREC_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace sttmrec {

// Malformed or missing user input. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A constrained assignment has no feasible solution. Exit code 3.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& message, std::string discussion_id)
      : std::runtime_error(message), discussion_id_(std::move(discussion_id)) {}

  const std::string& discussion_id() const { return discussion_id_; }

 private:
  std::string discussion_id_;
};

}  // namespace sttmrec

#endif  // STTMREC_COMMON_ERROR_H_
