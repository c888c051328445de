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

#include "bendforge/tooling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bendforge {

void check_tooling(const ToolingSpec& s) {
  const auto pos = [](double x) { return std::isfinite(x) && x > 0; };
  if (!(s.punch_tip_angle > 0 && s.punch_tip_angle < 180)) {
    throw std::invalid_argument("punch_tip_angle must lie in (0, 180)");
  }
  if (!pos(s.punch_thickness) || !pos(s.punch_length) || !pos(s.punch_body_height) || !pos(s.die_opening) ||
      !pos(s.die_block_width) || !pos(s.die_block_height)) {
    throw std::invalid_argument("tool dimensions must be positive");
  }
  if (!(std::isfinite(s.contact_clearance) && s.contact_clearance >= 0)) {
    throw std::invalid_argument("contact_clearance must be non-negative");
  }
}

std::string to_string(Alignment a) {
  switch (a) {
    case Alignment::left: return "left";
    case Alignment::center: return "center";
    case Alignment::right: return "right";
  }
  return "?";
}

ToolProfile punch_profile(const BendSection& sec, const ToolingSpec& spec) {
  if (sec.angle > 180.0 - spec.punch_tip_angle + 1e-9) {
    throw ConstructionError(sec.bend, "punch wedge cannot seat in a bend sharper than 180 - tip angle");
  }
  const double half = sec.angle / 2;
  const Vec2 b = sec.radial(half);
  const Vec2 e{std::cos(deg2rad(half)), sec.sigma * std::sin(deg2rad(half))};
  const double tip_height = spec.punch_thickness / (2 * std::tan(deg2rad(spec.punch_tip_angle / 2)));
  const double hw = spec.punch_thickness / 2;

  ToolProfile p;
  p.p_m = sec.center() + b * sec.radius;
  p.p_i = p.p_m - b * spec.contact_clearance;
  const Vec2 base = p.p_i - b * tip_height;
  p.p_a = base - e * hw;
  p.p_b = base + e * hw;
  const Vec2 top = b * -spec.punch_body_height;
  p.outline = cleaned(Polygon2{{p.p_i, p.p_b, p.p_b + top, p.p_a + top, p.p_a}});
  return p;
}

ToolProfile die_profile(const BendSection& sec, const ToolingSpec& spec) {
  const double half = deg2rad(sec.angle / 2);
  if (std::cos(half) < 1e-3) throw ConstructionError(sec.bend, "die channel undefined near 180 degrees");
  const Vec2 b = sec.radial(sec.angle / 2);
  const Vec2 e{std::cos(half), sec.sigma * std::sin(half)};
  const double outer = sec.radius + sec.thickness;
  const double d2 = spec.die_opening / 2;
  const double depth = d2 * std::tan(half);
  const double height = std::max(spec.die_block_height, depth + 10.0);
  const double w2 = std::max(spec.die_block_width, spec.die_opening + 10.0) / 2;

  ToolProfile p;
  p.p_m = sec.center() + b * outer;
  const Vec2 origin = sec.center() + b * ((outer + spec.contact_clearance) / std::cos(half));
  p.p_i = sec.center() + b * (outer / std::cos(half));
  auto at = [&](double x, double y) { return origin + e * x + b * y; };
  p.p_a = at(-d2, -depth);
  p.p_b = at(d2, -depth);
  p.outline = cleaned(Polygon2{{at(-w2, -depth), p.p_a, at(0, 0), p.p_b, at(w2, -depth), at(w2, height - depth),
                                at(-w2, height - depth)}});
  return p;
}

double tool_end(const BendSection& sec, Alignment align, const ToolingSpec& spec) {
  switch (align) {
    case Alignment::left: return sec.offset + spec.punch_length;
    case Alignment::center: return sec.offset + 0.5 * (sec.width + spec.punch_length);
    case Alignment::right: return sec.offset + sec.width;
  }
  return 0.0;
}

namespace {

TriMesh extrude_tool(const ToolProfile& p, const BendSection& sec, Alignment align, const ToolingSpec& spec) {
  try {
    return extrude(p.outline, sec.section_frame(tool_end(sec, align, spec)), spec.punch_length);
  } catch (const GeometryError& e) {
    throw ConstructionError(sec.bend, std::string("tool extrusion failed: ") + e.what());
  }
}

}  // namespace

TriMesh build_punch(const BendSection& sec, Alignment align, const ToolingSpec& spec) {
  return extrude_tool(punch_profile(sec, spec), sec, align, spec);
}

TriMesh build_die(const BendSection& sec, Alignment align, const ToolingSpec& spec) {
  return extrude_tool(die_profile(sec, spec), sec, align, spec);
}

}  // namespace bendforge
