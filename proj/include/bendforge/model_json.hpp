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

#include <stdexcept>
#include <string>

#include "bendforge/model.hpp"
#include "json.hpp"

namespace bendforge {

/// Malformed or wrong-version document.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json sheet_to_json(const SheetSpec& s);
nlohmann::json material_to_json(const MaterialSpec& m);
nlohmann::json bend_to_json(const BendSpec& b);
SheetSpec sheet_from_json(const nlohmann::json& j);
MaterialSpec material_from_json(const nlohmann::json& j);
BendSpec bend_from_json(const nlohmann::json& j);

/// {id, seed, sheet, material, bends[]}; extra keys are ignored so a full part
/// metadata file is also a valid design document.
nlohmann::json design_to_json(const PartDesign& d);
PartDesign design_from_json(const nlohmann::json& j);

PartDesign load_design(const std::string& path);

}  // namespace bendforge
