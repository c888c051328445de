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

#include <array>
#include <string>

#include "bendforge/forming.hpp"

namespace bendforge {

struct ToolingSpec {
  double punch_tip_angle = 90.0;     // degrees
  double punch_thickness = 10.0;     // mm
  double punch_length = 300.0;       // mm along the bend line
  double punch_body_height = 120.0;  // mm above the tip
  double die_opening = 40.0;         // mm
  double die_block_width = 60.0;     // mm
  double die_block_height = 60.0;    // mm
  double contact_clearance = 0.05;   // mm
  bool operator==(const ToolingSpec&) const = default;
};

/// Throws std::invalid_argument on non-positive dimensions.
void check_tooling(const ToolingSpec& spec);

enum class Alignment { left, center, right };
constexpr std::array<Alignment, 3> kAlignments{Alignment::left, Alignment::center, Alignment::right};
std::string to_string(Alignment a);

/// Cross-section construction in bend section coordinates.
struct ToolProfile {
  Vec2 p_m;    // inner arc midpoint (punch) or outer arc midpoint (die)
  Vec2 p_a;
  Vec2 p_b;
  Vec2 p_i;    // punch apex, or the die's tangent intersection
  Polygon2 outline;
};

/// Wedge of tip angle alpha seated clearance c off the inner arc midpoint,
/// closed at punch_thickness and continued as a body block. Throws
/// ConstructionError when the bend is sharper than the wedge can seat.
ToolProfile punch_profile(const BendSection& section, const ToolingSpec& spec);

/// V channel along the outer tangents, lips at die_opening/2 either side of
/// the bisector, standing clearance c off the outer surface.
ToolProfile die_profile(const BendSection& section, const ToolingSpec& spec);

/// Along-edge end of the tool for an alignment (tools span [end - L_p, end]).
double tool_end(const BendSection& section, Alignment align, const ToolingSpec& spec);

TriMesh build_punch(const BendSection& section, Alignment align, const ToolingSpec& spec);
TriMesh build_die(const BendSection& section, Alignment align, const ToolingSpec& spec);

}  // namespace bendforge
