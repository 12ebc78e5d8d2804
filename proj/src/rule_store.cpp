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

#include "c4learn/rule_store.hpp"

#include <iostream>
#include <mutex>

#include "c4learn/error.hpp"
#include "c4learn/json_io.hpp"

namespace c4learn {

RuleStore::RuleStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (dir_.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + dir_.string() + ": " + ec.message());
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    try {
      WinRule rule = rule_from_json(read_json_file(entry.path()));
      rules_.emplace(rule_id(rule), std::move(rule));
    } catch (const Error& e) {
      std::cerr << "skipping " << entry.path().string() << ": " << e.what() << '\n';
    }
  }
}

std::string RuleStore::put(const WinRule& rule) {
  const std::string id = rule_id(rule);
  std::unique_lock lock(mu_);
  if (rules_.count(id)) return id;
  if (!dir_.empty()) write_json_file(dir_ / (id + ".json"), rule_to_json(rule));
  rules_.emplace(id, rule);
  return id;
}

std::optional<WinRule> RuleStore::get(const std::string& id) const {
  std::shared_lock lock(mu_);
  auto it = rules_.find(id);
  if (it == rules_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::string, WinRule>> RuleStore::list() const {
  std::shared_lock lock(mu_);
  return {rules_.begin(), rules_.end()};
}

}  // namespace c4learn
