// Copyright 2026 The BendForge Authors.
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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bendforge/sampler.hpp"

namespace bendforge {

/// Bad configuration document or override.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class BalanceLabel { tool_collision, unfold_overlap };
std::string to_string(BalanceLabel b);

struct SubsetSpec {
  std::string name = "mini";
  int min_bends = 2;
  int max_bends = 5;
  int quota = 40;  // parts per (bend count, class)
  BalanceLabel balance = BalanceLabel::tool_collision;
  bool require_no_unfold_overlap = true;
  double starvation_factor = 200.0;  // draw budget per bend count, x quota
};

struct RunConfig {
  GenConfig gen;
  SubsetSpec subset;
  std::uint64_t seed = 0;
  std::string output_dir = "out";
};

/// Canonical document with every key present.
nlohmann::json run_config_to_json(const RunConfig& c);
/// Strict parse: unknown keys and wrong types raise ConfigError; missing keys
/// keep their defaults.
RunConfig run_config_from_json(const nlohmann::json& j);

/// Applies "dotted.key=value" to a config document. The key must exist in the
/// canonical schema and the value must have the same JSON type. "sampler." is
/// accepted as an alias of "gen.".
void apply_override(nlohmann::json& doc, const std::string& assignment);

/// Reads path (empty for defaults) and applies the overrides in order.
RunConfig load_run_config(const std::string& path, const std::vector<std::string>& overrides = {});

/// FNV-1a 64 over the canonical compact JSON, as 16 hex digits. The output
/// directory is excluded so relocating a run does not change its identity.
std::string config_hash(const RunConfig& c);

}  // namespace bendforge
