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

#include "bendforge/labeling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <stdexcept>

#include "bendforge/geom/overlap.hpp"

namespace bendforge {

std::string to_string(TaxonomyQuadrant q) {
  switch (q) {
    case TaxonomyQuadrant::geometric_feasibility: return "geometric_feasibility";
    case TaxonomyQuadrant::configurational_feasibility: return "configurational_feasibility";
    case TaxonomyQuadrant::geometric_complexity: return "geometric_complexity";
    case TaxonomyQuadrant::configurational_complexity: return "configurational_complexity";
  }
  return "?";
}

TaxonomyQuadrant quadrant_from_string(const std::string& s) {
  for (auto q : {TaxonomyQuadrant::geometric_feasibility, TaxonomyQuadrant::configurational_feasibility,
                 TaxonomyQuadrant::geometric_complexity, TaxonomyQuadrant::configurational_complexity}) {
    if (to_string(q) == s) return q;
  }
  throw std::invalid_argument("unknown taxonomy quadrant: " + s);
}

std::string to_string(const PatternRef& r) {
  return (r.kind == PatternKind::face ? "face:" : "strip:") + std::to_string(r.index);
}

std::vector<double> sweep_angles(double final_deg, double step_deg) {
  if (!(step_deg > 0)) throw std::invalid_argument("sweep step must be positive");
  std::vector<double> out;
  for (int k = 0; k * step_deg < final_deg - 1e-9; ++k) out.push_back(k * step_deg);
  out.push_back(final_deg);
  return out;
}

namespace {

// Runs one tool test; construction failures count as collisions.
bool tool_hits(const char* tool, double angle, Alignment align, const MeshIndex& part,
               const std::function<TriMesh()>& build, double pen_tol, std::set<std::string>& seen,
               std::vector<std::string>& diagnostics) {
  try {
    return mesh_overlap(MeshIndex(build()), part, pen_tol).overlaps;
  } catch (const ConstructionError& e) {
    const std::string key = std::string(tool) + ": " + e.reason();
    if (seen.insert(key).second) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " (first at %g deg, %s)", angle, to_string(align).c_str());
      diagnostics.push_back(key + buf);
    }
    return true;
  }
}

}  // namespace

BendCollisionRecord check_bend(const PartDesign& design, int bend, const ToolingSpec& spec,
                               const LabelingOptions& options) {
  if (bend < 0 || bend >= static_cast<int>(design.bends.size())) throw std::out_of_range("bend index");
  const PartGeometry geometry = build_part_geometry(design, options.arc_step_deg);
  AngleAssignment angles(design.bends.size(), 0.0);
  for (int j = 0; j < bend; ++j) angles[j] = design.bends[j].angle;

  BendCollisionRecord rec;
  rec.bend = bend;
  std::array<bool, 3> punch_fail{}, die_fail{}, fail{};
  std::set<std::string> seen;
  for (double theta : sweep_angles(design.bends[bend].angle, options.sweep_step_deg)) {
    angles[bend] = theta;
    const FormedState state = form(design, geometry, angles);
    const MeshIndex part(realize(design, geometry, state, options.arc_step_deg).merged());
    const BendSection& sec = state.sections[bend];
    for (std::size_t a = 0; a < kAlignments.size(); ++a) {
      const Alignment al = kAlignments[a];
      const bool p = tool_hits("punch", theta, al, part, [&] { return build_punch(sec, al, spec); },
                               options.pen_tol, seen, rec.diagnostics);
      const bool d = tool_hits("die", theta, al, part, [&] { return build_die(sec, al, spec); },
                               options.pen_tol, seen, rec.diagnostics);
      if (p) rec.alignments[a].punch.push_back(theta);
      if (d) rec.alignments[a].die.push_back(theta);
      punch_fail[a] = punch_fail[a] || p;
      die_fail[a] = die_fail[a] || d;
      fail[a] = fail[a] || p || d;
    }
    const auto all = [](const std::array<bool, 3>& v) { return v[0] && v[1] && v[2]; };
    if (!rec.first_colliding_angle && all(fail)) rec.first_colliding_angle = theta;
    rec.punch_collides = all(punch_fail);
    rec.die_collides = all(die_fail);
    rec.collides = all(fail);
  }
  return rec;
}

UnfoldOverlap unfold_overlap(const PartDesign& design, const LabelingOptions& options) {
  return unfold_overlap(unfold(design, options.arc_step_deg), design, options);
}

UnfoldOverlap unfold_overlap(const UnfoldedPattern& pattern, const PartDesign& design,
                             const LabelingOptions& options) {
  const std::size_t n = pattern.faces.size();
  std::vector<PatternRef> refs(n);
  std::vector<std::array<double, 4>> boxes(n);
  for (std::size_t i = 0; i < n; ++i) {
    const PatternFace& f = pattern.faces[i];
    refs[i] = {f.kind, f.kind == PatternKind::face ? f.source + 1 : f.source};
    std::array<double, 4> b{INFINITY, INFINITY, -INFINITY, -INFINITY};
    for (const Vec2& v : f.polygon.vertices) {
      b[0] = std::min(b[0], v.x), b[1] = std::min(b[1], v.y);
      b[2] = std::max(b[2], v.x), b[3] = std::max(b[3], v.y);
    }
    boxes[i] = b;
  }
  std::set<std::pair<PatternRef, PatternRef>> adjacent;
  for (std::size_t b = 0; b < design.bends.size(); ++b) {
    const PatternRef strip{PatternKind::strip, static_cast<int>(b)};
    const PatternRef parent{PatternKind::face, design.bends[b].parent_face};
    const PatternRef child{PatternKind::face, flange_face(static_cast<int>(b))};
    adjacent.insert({std::min(strip, parent), std::max(strip, parent)});
    adjacent.insert({std::min(strip, child), std::max(strip, child)});
  }

  UnfoldOverlap out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = boxes[i];
      const auto& b = boxes[j];
      if (a[0] >= b[2] || b[0] >= a[2] || a[1] >= b[3] || b[1] >= a[3]) continue;
      const PatternRef ra = std::min(refs[i], refs[j]);
      const PatternRef rb = std::max(refs[i], refs[j]);
      if (adjacent.count({ra, rb})) continue;
      if (intersection_area(pattern.faces[i].polygon, pattern.faces[j].polygon) > options.area_eps) {
        out.pairs.emplace_back(ra, rb);
      }
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  out.overlap = !out.pairs.empty();
  return out;
}

Reorientation reorientation(const PartDesign& design) {
  Reorientation out;
  if (design.bends.size() < 2) return out;
  const PartGeometry geometry = build_part_geometry(design);
  for (std::size_t i = 1; i < design.bends.size(); ++i) {
    AngleAssignment angles(design.bends.size(), 0.0);
    for (std::size_t j = 0; j < i; ++j) angles[j] = design.bends[j].angle;
    const FormedState state = form(design, geometry, angles);
    const BendSection& prev = state.sections[i - 1];
    const BendSection& cur = state.sections[i];

    ReorientationRecord r;
    r.transition = static_cast<int>(i);
    r.m_prev = prev.world(prev.offset + prev.width / 2, prev.arc_point(prev.neutral_radius(), prev.angle / 2));
    r.m_i = cur.world(cur.offset + cur.width / 2, cur.arc_point(cur.neutral_radius(), 0.0));
    r.n_end_prev = normalized(prev.world_dir(prev.radial(prev.angle)));
    r.n_start_i = normalized(cur.world_dir(cur.radial(0.0)));
    r.distance = norm(r.m_i - r.m_prev);
    r.angle = rad2deg(std::acos(std::clamp(dot(r.n_end_prev, r.n_start_i), -1.0, 1.0)));
    r.flip = r.angle > kFlipThresholdDeg;

    out.totals.total_distance += r.distance;
    out.totals.total_angle += r.angle;
    out.totals.n_flips += r.flip ? 1 : 0;
    out.records.push_back(r);
  }
  return out;
}

namespace {

int count_distinct(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  int n = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == 0 || v[i] - v[i - 1] > 1e-9) ++n;
  }
  return n;
}

}  // namespace

LabelSet label_part(const PartDesign& design, const ToolingSpec& spec, const LabelingOptions& options) {
  try {
    LabelSet L;
    for (int i = 0; i < static_cast<int>(design.bends.size()); ++i) {
      L.bends.push_back(check_bend(design, i, spec, options));
      const BendCollisionRecord& r = L.bends.back();
      L.n_colliding_bends.value += r.collides ? 1 : 0;
      L.n_punch_colliding_bends.value += r.punch_collides ? 1 : 0;
      L.n_die_colliding_bends.value += r.die_collides ? 1 : 0;
    }
    L.has_tool_collision.value = L.n_colliding_bends.value > 0;

    const UnfoldedPattern pattern = unfold(design, options.arc_step_deg);
    const UnfoldOverlap ov = unfold_overlap(pattern, design, options);
    L.unfold_overlap.value = ov.overlap;
    L.overlap_pairs.value = ov.pairs;

    const Reorientation re = reorientation(design);
    L.reorientation = re.records;
    L.total_distance_mm.value = re.totals.total_distance;
    L.total_angle_deg.value = re.totals.total_angle;
    L.n_flips.value = re.totals.n_flips;

    const SolidMetrics m = solid_metrics(realize(design, final_angles(design), options.arc_step_deg));
    L.n_bends.value = static_cast<int>(design.bends.size());
    L.thickness_mm.value = design.material.thickness;
    L.bbox_volume_cm3.value = m.aabb_volume * 1e-3;
    L.solid_volume_cm3.value = m.volume * 1e-3;
    L.unfolded_bbox_area_cm2.value = pattern_bbox_area(pattern) * 1e-2;
    L.mass_kg.value = m.volume * 1e-9 * design.material.density;

    std::vector<double> angles, radii, heights;
    for (const BendSpec& b : design.bends) {
      angles.push_back(b.angle);
      radii.push_back(b.radius);
      heights.push_back(b.flange_height);
      L.n_reliefs.value += b.relief ? 1 : 0;
      L.n_rounded.value += b.flange_type == FlangeType::rounded ? 1 : 0;
    }
    L.n_distinct_angles.value = count_distinct(angles);
    L.n_distinct_radii.value = count_distinct(radii);
    if (!design.bends.empty()) {
      L.min_flange_height_mm.value = *std::min_element(heights.begin(), heights.end());
      L.max_flange_height_mm.value = *std::max_element(heights.begin(), heights.end());
      L.min_angle_deg.value = *std::min_element(angles.begin(), angles.end());
      L.max_angle_deg.value = *std::max_element(angles.begin(), angles.end());
      L.min_radius_mm.value = *std::min_element(radii.begin(), radii.end());
      L.max_radius_mm.value = *std::max_element(radii.begin(), radii.end());
    }
    return L;
  } catch (const ConstructionError& e) {
    throw ConstructionError(e.bend_index(), e.reason(), "part " + design.id + ": ");
  }
}

}  // namespace bendforge
