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

#ifndef STTMREC_COMMON_CONFIG_H_
#define STTMREC_COMMON_CONFIG_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sttmrec {

// Flat key=value configuration. Lines starting with '#' are comments,
// values may be wrapped in double quotes, and `[section]` headers prefix the
// following keys as "section.key".
class Config {
 public:
  static Config Parse(std::string_view text, std::string_view source);
  static Config Load(const std::string& path);

  void Set(const std::string& key, std::string value) {
    values_[key] = std::move(value);
  }
  bool Has(const std::string& key) const { return values_.count(key) > 0; }

  std::optional<std::string> Get(const std::string& key) const;
  std::string GetString(const std::string& key, std::string fallback) const;
  int64_t GetInt(const std::string& key, int64_t fallback) const;
  double GetDouble(const std::string& key, double fallback) const;
  // Comma-separated list; surrounding whitespace trimmed.
  std::vector<std::string> GetList(const std::string& key,
                                   std::vector<std::string> fallback) const;

  const std::map<std::string, std::string>& values() const { return values_; }

  // Canonical "key=value\n" rendering in key order.
  std::string Canonical() const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace sttmrec

#endif  // STTMREC_COMMON_CONFIG_H_
