// Copyright 2026 The c4learn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "c4learn/win_rule.hpp"

namespace c4learn {

// Content-addressed rule files: <dir>/<rule_id>.json. Reads run concurrently,
// writes are exclusive. An empty directory path keeps rules in memory only.
class RuleStore {
 public:
  explicit RuleStore(std::filesystem::path dir = {});

  // Stores the rule (idempotent) and returns its id.
  std::string put(const WinRule& rule);
  std::optional<WinRule> get(const std::string& id) const;
  std::vector<std::pair<std::string, WinRule>> list() const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  mutable std::shared_mutex mu_;
  std::map<std::string, WinRule> rules_;
};

}  // namespace c4learn
