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

#include "bendforge/labels_json.hpp"

namespace bendforge {

using nlohmann::json;

namespace {

json vec_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw SchemaError("expected a 3-vector");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

template <class T>
json label_json(const Label<T>& l) {
  return {{"value", l.value}, {"quadrant", to_string(l.quadrant)}};
}

template <class T>
void read_label(const json& section, const char* key, Label<T>& out) {
  if (!section.contains(key)) throw SchemaError(std::string("missing label '") + key + "'");
  const json& j = section.at(key);
  try {
    out.value = j.at("value").get<T>();
    out.quadrant = quadrant_from_string(j.at("quadrant").get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(std::string("label '") + key + "': " + e.what());
  }
}

json pattern_ref_json(const PatternRef& r) {
  return {{"kind", r.kind == PatternKind::face ? "face" : "strip"}, {"index", r.index}};
}

PatternRef pattern_ref_from(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "face" && kind != "strip") throw SchemaError("unknown pattern piece kind: " + kind);
  return {kind == "face" ? PatternKind::face : PatternKind::strip, j.at("index").get<int>()};
}

}  // namespace

json collision_record_to_json(const BendCollisionRecord& r) {
  json al = json::object();
  for (std::size_t a = 0; a < kAlignments.size(); ++a) {
    al[to_string(kAlignments[a])] = {{"punch", r.alignments[a].punch}, {"die", r.alignments[a].die}};
  }
  return {{"bend", r.bend},
          {"alignments", al},
          {"punch_collides", r.punch_collides},
          {"die_collides", r.die_collides},
          {"collides", r.collides},
          {"first_colliding_angle_deg", r.first_colliding_angle ? json(*r.first_colliding_angle) : json(nullptr)},
          {"diagnostics", r.diagnostics}};
}

BendCollisionRecord collision_record_from_json(const json& j) {
  try {
    BendCollisionRecord r;
    r.bend = j.at("bend").get<int>();
    for (std::size_t a = 0; a < kAlignments.size(); ++a) {
      const json& s = j.at("alignments").at(to_string(kAlignments[a]));
      r.alignments[a].punch = s.at("punch").get<std::vector<double>>();
      r.alignments[a].die = s.at("die").get<std::vector<double>>();
    }
    r.punch_collides = j.at("punch_collides").get<bool>();
    r.die_collides = j.at("die_collides").get<bool>();
    r.collides = j.at("collides").get<bool>();
    if (!j.at("first_colliding_angle_deg").is_null()) {
      r.first_colliding_angle = j.at("first_colliding_angle_deg").get<double>();
    }
    r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("collision record: ") + e.what());
  }
}

json reorientation_to_json(const std::vector<ReorientationRecord>& records) {
  json out = json::array();
  for (const ReorientationRecord& r : records) {
    out.push_back({{"transition", r.transition},
                   {"m_prev", vec_json(r.m_prev)},
                   {"m_i", vec_json(r.m_i)},
                   {"n_end_prev", vec_json(r.n_end_prev)},
                   {"n_start_i", vec_json(r.n_start_i)},
                   {"distance_mm", r.distance},
                   {"angle_deg", r.angle},
                   {"flip", r.flip}});
  }
  return out;
}

std::vector<ReorientationRecord> reorientation_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("reorientation must be an array");
  std::vector<ReorientationRecord> out;
  try {
    for (const json& e : j) {
      ReorientationRecord r;
      r.transition = e.at("transition").get<int>();
      r.m_prev = vec_from(e.at("m_prev"));
      r.m_i = vec_from(e.at("m_i"));
      r.n_end_prev = vec_from(e.at("n_end_prev"));
      r.n_start_i = vec_from(e.at("n_start_i"));
      r.distance = e.at("distance_mm").get<double>();
      r.angle = e.at("angle_deg").get<double>();
      r.flip = e.at("flip").get<bool>();
      out.push_back(r);
    }
  } catch (const json::exception& e) {
    throw SchemaError(std::string("reorientation record: ") + e.what());
  }
  return out;
}

json labels_to_json(const LabelSet& L) {
  json per_bend = json::array();
  for (const BendCollisionRecord& r : L.bends) per_bend.push_back(collision_record_to_json(r));
  json pairs = json::array();
  for (const auto& [a, b] : L.overlap_pairs.value) pairs.push_back({pattern_ref_json(a), pattern_ref_json(b)});

  json feas;
  feas["per_bend"] = {{"value", per_bend}, {"quadrant", to_string(TaxonomyQuadrant::configurational_feasibility)}};
  feas["has_tool_collision"] = label_json(L.has_tool_collision);
  feas["n_colliding_bends"] = label_json(L.n_colliding_bends);
  feas["n_punch_colliding_bends"] = label_json(L.n_punch_colliding_bends);
  feas["n_die_colliding_bends"] = label_json(L.n_die_colliding_bends);
  feas["unfold_overlap"] = label_json(L.unfold_overlap);
  feas["overlap_pairs"] = {{"value", pairs}, {"quadrant", to_string(L.overlap_pairs.quadrant)}};

  json cx;
  cx["total_distance_mm"] = label_json(L.total_distance_mm);
  cx["total_angle_deg"] = label_json(L.total_angle_deg);
  cx["n_flips"] = label_json(L.n_flips);
  cx["n_bends"] = label_json(L.n_bends);
  cx["thickness_mm"] = label_json(L.thickness_mm);
  cx["bbox_volume_cm3"] = label_json(L.bbox_volume_cm3);
  cx["solid_volume_cm3"] = label_json(L.solid_volume_cm3);
  cx["unfolded_bbox_area_cm2"] = label_json(L.unfolded_bbox_area_cm2);
  cx["mass_kg"] = label_json(L.mass_kg);
  cx["n_distinct_angles"] = label_json(L.n_distinct_angles);
  cx["n_distinct_radii"] = label_json(L.n_distinct_radii);
  cx["min_flange_height_mm"] = label_json(L.min_flange_height_mm);
  cx["max_flange_height_mm"] = label_json(L.max_flange_height_mm);
  cx["min_angle_deg"] = label_json(L.min_angle_deg);
  cx["max_angle_deg"] = label_json(L.max_angle_deg);
  cx["min_radius_mm"] = label_json(L.min_radius_mm);
  cx["max_radius_mm"] = label_json(L.max_radius_mm);
  cx["n_reliefs"] = label_json(L.n_reliefs);
  cx["n_rounded"] = label_json(L.n_rounded);
  return {{"feasibility", feas}, {"complexity", cx}};
}

LabelSet labels_from_json(const json& labels, const json& reorientation) {
  if (!labels.is_object() || !labels.contains("feasibility") || !labels.contains("complexity")) {
    throw SchemaError("labels must hold 'feasibility' and 'complexity'");
  }
  const json& feas = labels.at("feasibility");
  const json& cx = labels.at("complexity");
  LabelSet L;
  try {
    for (const json& r : feas.at("per_bend").at("value")) L.bends.push_back(collision_record_from_json(r));
    for (const json& p : feas.at("overlap_pairs").at("value")) {
      L.overlap_pairs.value.emplace_back(pattern_ref_from(p.at(0)), pattern_ref_from(p.at(1)));
    }
  } catch (const json::exception& e) {
    throw SchemaError(std::string("labels: ") + e.what());
  }
  read_label(feas, "has_tool_collision", L.has_tool_collision);
  read_label(feas, "n_colliding_bends", L.n_colliding_bends);
  read_label(feas, "n_punch_colliding_bends", L.n_punch_colliding_bends);
  read_label(feas, "n_die_colliding_bends", L.n_die_colliding_bends);
  read_label(feas, "unfold_overlap", L.unfold_overlap);
  L.reorientation = reorientation_from_json(reorientation);
  read_label(cx, "total_distance_mm", L.total_distance_mm);
  read_label(cx, "total_angle_deg", L.total_angle_deg);
  read_label(cx, "n_flips", L.n_flips);
  read_label(cx, "n_bends", L.n_bends);
  read_label(cx, "thickness_mm", L.thickness_mm);
  read_label(cx, "bbox_volume_cm3", L.bbox_volume_cm3);
  read_label(cx, "solid_volume_cm3", L.solid_volume_cm3);
  read_label(cx, "unfolded_bbox_area_cm2", L.unfolded_bbox_area_cm2);
  read_label(cx, "mass_kg", L.mass_kg);
  read_label(cx, "n_distinct_angles", L.n_distinct_angles);
  read_label(cx, "n_distinct_radii", L.n_distinct_radii);
  read_label(cx, "min_flange_height_mm", L.min_flange_height_mm);
  read_label(cx, "max_flange_height_mm", L.max_flange_height_mm);
  read_label(cx, "min_angle_deg", L.min_angle_deg);
  read_label(cx, "max_angle_deg", L.max_angle_deg);
  read_label(cx, "min_radius_mm", L.min_radius_mm);
  read_label(cx, "max_radius_mm", L.max_radius_mm);
  read_label(cx, "n_reliefs", L.n_reliefs);
  read_label(cx, "n_rounded", L.n_rounded);
  return L;
}

}  // namespace bendforge
