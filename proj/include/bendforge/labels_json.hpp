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

#include <vector>

#include "bendforge/labeling.hpp"
#include "bendforge/model_json.hpp"

namespace bendforge {

nlohmann::json collision_record_to_json(const BendCollisionRecord& r);
BendCollisionRecord collision_record_from_json(const nlohmann::json& j);

nlohmann::json reorientation_to_json(const std::vector<ReorientationRecord>& records);
std::vector<ReorientationRecord> reorientation_from_json(const nlohmann::json& j);

/// {feasibility{...}, complexity{...}}; every label is {value, quadrant}.
/// Reorientation records travel separately (see reorientation_to_json).
nlohmann::json labels_to_json(const LabelSet& labels);
LabelSet labels_from_json(const nlohmann::json& labels, const nlohmann::json& reorientation);

}  // namespace bendforge
