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

#include "bendforge/model_json.hpp"

#include <fstream>
#include <sstream>

namespace bendforge {

using nlohmann::json;

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw SchemaError(std::string("field '") + key + "' has the wrong type");
  }
}

template <class T>
T field_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  return field<T>(j, key);
}

template <class F>
auto parse_enum(F f, const std::string& s) {
  try {
    return f(s);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

}  // namespace

json sheet_to_json(const SheetSpec& s) {
  return {{"length_mm", s.length}, {"width_mm", s.width}, {"plane", to_string(s.plane)}};
}

json material_to_json(const MaterialSpec& m) {
  return {{"thickness_mm", m.thickness}, {"k_factor", m.k_factor}, {"density_kg_m3", m.density}};
}

json bend_to_json(const BendSpec& b) {
  json j{{"parent_face", b.parent_face},
         {"parent_edge", b.parent_edge},
         {"offset_mm", b.offset},
         {"width_mm", b.width},
         {"angle_deg", b.angle},
         {"radius_mm", b.radius},
         {"direction", to_string(b.direction)},
         {"flange_height_mm", b.flange_height},
         {"flange_type", to_string(b.flange_type)},
         {"slant_angle_deg", b.slant_angle}};
  j["relief"] = b.relief ? json{{"notch_width_mm", b.relief->notch_width},
                                {"notch_depth_mm", b.relief->notch_depth}}
                         : json(nullptr);
  j["mirror_of"] = b.mirror_of ? json(*b.mirror_of) : json(nullptr);
  return j;
}

SheetSpec sheet_from_json(const json& j) {
  SheetSpec s;
  s.length = field<double>(j, "length_mm");
  s.width = field<double>(j, "width_mm");
  s.plane = parse_enum(sheet_plane_from_string, field_or<std::string>(j, "plane", "XY"));
  return s;
}

MaterialSpec material_from_json(const json& j) {
  MaterialSpec m;
  m.thickness = field<double>(j, "thickness_mm");
  m.k_factor = field_or<double>(j, "k_factor", m.k_factor);
  m.density = field_or<double>(j, "density_kg_m3", m.density);
  return m;
}

BendSpec bend_from_json(const json& j) {
  BendSpec b;
  b.parent_face = field<int>(j, "parent_face");
  b.parent_edge = field<int>(j, "parent_edge");
  b.offset = field<double>(j, "offset_mm");
  b.width = field<double>(j, "width_mm");
  b.angle = field<double>(j, "angle_deg");
  b.radius = field<double>(j, "radius_mm");
  b.direction = parse_enum(bend_direction_from_string, field<std::string>(j, "direction"));
  b.flange_height = field<double>(j, "flange_height_mm");
  b.flange_type = parse_enum(flange_type_from_string, field_or<std::string>(j, "flange_type", "rectangular"));
  b.slant_angle = field_or<double>(j, "slant_angle_deg", 0.0);
  if (j.contains("relief") && !j.at("relief").is_null()) {
    const json& r = j.at("relief");
    b.relief = Relief{field<double>(r, "notch_width_mm"), field<double>(r, "notch_depth_mm")};
  }
  if (j.contains("mirror_of") && !j.at("mirror_of").is_null()) b.mirror_of = field<int>(j, "mirror_of");
  return b;
}

json design_to_json(const PartDesign& d) {
  json bends = json::array();
  for (const BendSpec& b : d.bends) bends.push_back(bend_to_json(b));
  return {{"id", d.id},
          {"seed", d.seed},
          {"sheet", sheet_to_json(d.sheet)},
          {"material", material_to_json(d.material)},
          {"bends", bends}};
}

PartDesign design_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("design document must be a JSON object");
  PartDesign d;
  d.id = field_or<std::string>(j, "id", "");
  d.seed = field_or<std::uint64_t>(j, "seed", 0);
  d.sheet = sheet_from_json(field<json>(j, "sheet"));
  d.material = material_from_json(field<json>(j, "material"));
  const json bends = field_or<json>(j, "bends", json::array());
  if (!bends.is_array()) throw SchemaError("field 'bends' must be an array");
  for (const json& b : bends) d.bends.push_back(bend_from_json(b));
  return d;
}

PartDesign load_design(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
  return design_from_json(j);
}

}  // namespace bendforge
