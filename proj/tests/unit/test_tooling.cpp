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

#include <catch_amalgamated.hpp>

#include <cmath>

#include "bendforge/geom/overlap.hpp"
#include "bendforge/labeling.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bendforge;
using Catch::Approx;

namespace {

struct State {
  PartDesign design;
  PartGeometry geometry;
  FormedState formed;
  const BendSection& section(int i) const { return formed.sections[i]; }
};

State at_angle(PartDesign d, double theta) {
  State s{d, build_part_geometry(d), {}};
  AngleAssignment a(d.bends.size(), 0.0);
  a.back() = theta;
  for (std::size_t i = 0; i + 1 < d.bends.size(); ++i) a[i] = d.bends[i].angle;
  s.formed = form(s.design, s.geometry, a);
  return s;
}

double distance_to_line(Vec2 p, Vec2 origin, Vec2 dir) { return std::abs(cross(normalized(dir), p - origin)); }

}  // namespace

TEST_CASE("punch tip height and seating") {
  const ToolingSpec spec;
  const State s = at_angle(fixtures::single_bend(), 60);
  const ToolProfile p = punch_profile(s.section(0), spec);
  CHECK(norm(p.p_i - (p.p_a + p.p_b) * 0.5) == Approx(5).epsilon(1e-12));
  CHECK(norm(p.p_a - p.p_i) == Approx(norm(p.p_b - p.p_i)).epsilon(1e-12));
  CHECK(norm(p.p_m - p.p_i) == Approx(spec.contact_clearance).epsilon(1e-12));
  CHECK(norm(p.p_m - s.section(0).center()) == Approx(3).epsilon(1e-12));
}

TEST_CASE("punch cannot seat past 180 minus the tip angle") {
  const ToolingSpec spec;
  const State ok = at_angle(fixtures::single_bend(), 90);
  CHECK_NOTHROW(punch_profile(ok.section(0), spec));
  PartDesign sharp = fixtures::single_bend();
  sharp.bends[0].angle = 120;
  const State bad = at_angle(sharp, 95);
  CHECK_THROWS_AS(punch_profile(bad.section(0), spec), ConstructionError);
}

TEST_CASE("punch at the flat state stands clearance off the sheet") {
  const ToolingSpec spec;
  const State s = at_angle(fixtures::single_bend(), 0);
  const ToolProfile p = punch_profile(s.section(0), spec);
  CHECK(p.p_i.y == Approx(3 + spec.contact_clearance).epsilon(1e-12));
  const TriMesh punch = build_punch(s.section(0), Alignment::center, spec);
  const TriMesh part = realize(s.design, s.geometry, s.formed).merged();
  // The punch outruns the 200 mm part, so probe the middle of its tip line.
  std::vector<Vec3> tip;
  double low = INFINITY;
  for (const Vec3& v : punch.vertices) low = std::min(low, v.z);
  for (const Vec3& v : punch.vertices) {
    if (v.z < low + 1e-9) tip.push_back(v);
  }
  REQUIRE(tip.size() == 2);
  const Vec3 mid = (tip[0] + tip[1]) * 0.5;
  CHECK(oracle::surface_distance(part, mid) == Approx(spec.contact_clearance).margin(1e-9));
  double gap = INFINITY;
  for (const Vec3& v : punch.vertices) gap = std::min(gap, oracle::surface_distance(part, v));
  CHECK(gap >= spec.contact_clearance - 1e-9);
}

TEST_CASE("alignment placement along the bend line") {
  const ToolingSpec spec;
  PartDesign d = fixtures::base(200, 150);
  BendSpec b = fixtures::full_bend(0, 0, 200);
  b.offset = 40;
  b.width = 120;
  b.relief = Relief{3, 6};
  d.bends.push_back(b);
  const State s = at_angle(d, 45);
  const BendSection& sec = s.section(0);
  const double center = tool_end(sec, Alignment::center, spec) - spec.punch_length / 2;
  CHECK(center == Approx(40 + 60));
  CHECK(tool_end(sec, Alignment::left, spec) - spec.punch_length == Approx(40));
  CHECK(tool_end(sec, Alignment::right, spec) == Approx(160));
  // The edge runs along +x from the origin, so along positions are x values.
  const Aabb box = mesh_aabb(build_punch(sec, Alignment::center, spec));
  CHECK((box.min.x + box.max.x) / 2 == Approx(100).margin(1e-9));
}

TEST_CASE("die lips sit half the opening either side of the bisector") {
  const ToolingSpec spec;
  for (double theta : {0.0, 30.0, 90.0}) {
    const State s = at_angle(fixtures::single_bend(), theta);
    const BendSection& sec = s.section(0);
    const ToolProfile p = die_profile(sec, spec);
    const Vec2 bis = sec.radial(theta / 2);
    CHECK(distance_to_line(p.p_a, sec.center(), bis) == Approx(20).epsilon(1e-12));
    CHECK(distance_to_line(p.p_b, sec.center(), bis) == Approx(20).epsilon(1e-12));
    CHECK(cross(bis, p.p_a - sec.center()) * cross(bis, p.p_b - sec.center()) < 0);
  }
  const State flat = at_angle(fixtures::single_bend(), 0);
  const ToolProfile p = die_profile(flat.section(0), spec);
  const double mid = flat.section(0).center().x;
  CHECK(p.p_a.x - mid == Approx(-(p.p_b.x - mid)).epsilon(1e-12));
  CHECK(p.p_a.y == Approx(p.p_b.y).margin(1e-12));
}

TEST_CASE("tools around a lone bend never touch the part") {
  const ToolingSpec spec;
  PartDesign d = fixtures::base(200, 200);
  d.bends.push_back(fixtures::full_bend(0, 0, 200));
  for (double theta : sweep_angles(90, 5)) {
    const State s = at_angle(d, theta);
    const MeshIndex part(realize(s.design, s.geometry, s.formed).merged());
    for (Alignment al : kAlignments) {
      const TriMesh punch = build_punch(s.section(0), al, spec);
      const TriMesh die = build_die(s.section(0), al, spec);
      CHECK_FALSE(mesh_overlap(MeshIndex(punch), part, 1e-3).overlaps);
      CHECK_FALSE(mesh_overlap(MeshIndex(die), part, 1e-3).overlaps);
    }
  }
  CHECK_FALSE(check_bend(d, 0, spec).collides);
}

TEST_CASE("tools contact but never penetrate their own bend on down bends") {
  const ToolingSpec spec;
  PartDesign d = fixtures::base(200, 200, 5.0);
  d.bends.push_back(fixtures::full_bend(0, 0, 200, 90, 7.5, 120, BendDirection::down));
  for (double theta : {0.0, 20.0, 45.0, 70.0, 90.0}) {
    const State s = at_angle(d, theta);
    const MeshIndex part(realize(s.design, s.geometry, s.formed).merged());
    const TriMesh punch = build_punch(s.section(0), Alignment::center, spec);
    const TriMesh die = build_die(s.section(0), Alignment::center, spec);
    CHECK_FALSE(mesh_overlap(MeshIndex(punch), part, 1e-3).overlaps);
    CHECK_FALSE(mesh_overlap(MeshIndex(die), part, 1e-3).overlaps);
  }
}

TEST_CASE("left and right tools mirror across the bend midplane") {
  const ToolingSpec spec;
  const State s = at_angle(fixtures::single_bend(), 40);
  for (bool punch : {true, false}) {
    const TriMesh l = punch ? build_punch(s.section(0), Alignment::left, spec)
                            : build_die(s.section(0), Alignment::left, spec);
    const TriMesh r = punch ? build_punch(s.section(0), Alignment::right, spec)
                            : build_die(s.section(0), Alignment::right, spec);
    const Aabb bl = mesh_aabb(l);
    const Aabb br = mesh_aabb(r);
    CHECK(bl.min.x == Approx(200 - br.max.x).margin(1e-9));
    CHECK(bl.max.x == Approx(200 - br.min.x).margin(1e-9));
    CHECK(bl.min.y == Approx(br.min.y).margin(1e-9));
    CHECK(bl.max.z == Approx(br.max.z).margin(1e-9));
  }
}

TEST_CASE("tool meshes are closed prisms") {
  const ToolingSpec spec;
  const State s = at_angle(fixtures::single_bend(), 75);
  const ToolProfile pp = punch_profile(s.section(0), spec);
  const ToolProfile dp = die_profile(s.section(0), spec);
  const TriMesh punch = build_punch(s.section(0), Alignment::center, spec);
  const TriMesh die = build_die(s.section(0), Alignment::center, spec);
  CHECK(is_watertight(punch));
  CHECK(is_watertight(die));
  CHECK(mesh_volume(punch) == Approx(area(pp.outline) * spec.punch_length).epsilon(1e-9));
  CHECK(mesh_volume(die) == Approx(area(dp.outline) * spec.punch_length).epsilon(1e-9));
}

TEST_CASE("tooling spec validation") {
  ToolingSpec s;
  CHECK_NOTHROW(check_tooling(s));
  s.die_opening = 0;
  CHECK_THROWS_AS(check_tooling(s), std::invalid_argument);
  s = {};
  s.punch_tip_angle = 180;
  CHECK_THROWS_AS(check_tooling(s), std::invalid_argument);
}
