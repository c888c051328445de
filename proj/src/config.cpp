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

#include "bendforge/config.hpp"

#include <cstdio>
#include <fstream>

namespace bendforge {

using nlohmann::json;

std::string to_string(BalanceLabel b) {
  return b == BalanceLabel::tool_collision ? "tool_collision" : "unfold_overlap";
}

json run_config_to_json(const RunConfig& c) {
  const GenConfig& g = c.gen;
  const ToolingSpec& t = g.tooling;
  const LabelingOptions& l = g.labeling;
  json gen{{"sheet_dim_min", g.sheet_dim_min},
           {"sheet_dim_max", g.sheet_dim_max},
           {"thickness_min", g.thickness_min},
           {"thickness_max", g.thickness_max},
           {"angles", g.angles},
           {"angle_weights", g.angle_weights},
           {"radius_factor_min", g.radius_factor_min},
           {"radius_factor_max", g.radius_factor_max},
           {"flange_height_min", g.flange_height_min},
           {"flange_height_max", g.flange_height_max},
           {"partial_width_p", g.partial_width_p},
           {"width_fraction_min", g.width_fraction_min},
           {"width_fraction_max", g.width_fraction_max},
           {"relief_width_factor", g.relief_width_factor},
           {"relief_depth_factor", g.relief_depth_factor},
           {"weight_rectangular", g.weight_rectangular},
           {"weight_slanted", g.weight_slanted},
           {"weight_rounded", g.weight_rounded},
           {"slant_min", g.slant_min},
           {"slant_max", g.slant_max},
           {"symmetry_p", g.symmetry_p},
           {"up_p", g.up_p},
           {"feasible_fraction", g.feasible_fraction},
           {"max_attempts", g.max_attempts},
           {"depth_decay", g.depth_decay},
           {"k_factor", g.k_factor},
           {"density", g.density},
           {"randomize_plane", g.randomize_plane}};
  json tooling{{"punch_tip_angle", t.punch_tip_angle},   {"punch_thickness", t.punch_thickness},
               {"punch_length", t.punch_length},         {"punch_body_height", t.punch_body_height},
               {"die_opening", t.die_opening},           {"die_block_width", t.die_block_width},
               {"die_block_height", t.die_block_height}, {"contact_clearance", t.contact_clearance}};
  json labeling{{"arc_step_deg", l.arc_step_deg},
                {"sweep_step_deg", l.sweep_step_deg},
                {"pen_tol_mm", l.pen_tol},
                {"area_eps_mm2", l.area_eps}};
  json subset{{"name", c.subset.name},
              {"min_bends", c.subset.min_bends},
              {"max_bends", c.subset.max_bends},
              {"quota", c.subset.quota},
              {"balance", to_string(c.subset.balance)},
              {"require_no_unfold_overlap", c.subset.require_no_unfold_overlap},
              {"starvation_factor", c.subset.starvation_factor}};
  return {{"gen", gen},         {"tooling", tooling}, {"labeling", labeling},
          {"subset", subset},   {"seed", c.seed},     {"output_dir", c.output_dir}};
}

namespace {

bool is_integer(const json& v) { return v.is_number_integer() || v.is_number_unsigned(); }

// Checks value against the schema node and merges it into target.
void merge_checked(json& target, const json& value, const std::string& path) {
  const json& schema = target;
  if (schema.is_object()) {
    if (!value.is_object()) throw ConfigError(path + ": expected an object");
    for (const auto& [k, v] : value.items()) {
      const std::string sub = path.empty() ? k : path + "." + k;
      if (!schema.contains(k)) throw ConfigError("unknown config key '" + sub + "'");
      merge_checked(target[k], v, sub);
    }
    return;
  }
  bool ok = false;
  if (schema.is_number_unsigned()) {
    ok = value.is_number_unsigned() || (value.is_number_integer() && value.get<std::int64_t>() >= 0);
  } else if (schema.is_number_integer()) {
    ok = is_integer(value);
  } else if (schema.is_number_float()) {
    ok = value.is_number();
  } else if (schema.is_boolean()) {
    ok = value.is_boolean();
  } else if (schema.is_string()) {
    ok = value.is_string();
  } else if (schema.is_array()) {
    ok = value.is_array();
    for (const json& e : value) ok = ok && e.is_number();
  }
  if (!ok) throw ConfigError("config key '" + path + "' expects " + std::string(schema.type_name()));
  target = value;
}

template <class T>
void get(const json& j, const char* key, T& out) {
  out = j.at(key).get<T>();
}

}  // namespace

RunConfig run_config_from_json(const json& j) {
  json doc = run_config_to_json(RunConfig{});
  merge_checked(doc, j, "");
  RunConfig c;
  GenConfig& g = c.gen;
  const json& gj = doc.at("gen");
  get(gj, "sheet_dim_min", g.sheet_dim_min);
  get(gj, "sheet_dim_max", g.sheet_dim_max);
  get(gj, "thickness_min", g.thickness_min);
  get(gj, "thickness_max", g.thickness_max);
  get(gj, "angles", g.angles);
  get(gj, "angle_weights", g.angle_weights);
  get(gj, "radius_factor_min", g.radius_factor_min);
  get(gj, "radius_factor_max", g.radius_factor_max);
  get(gj, "flange_height_min", g.flange_height_min);
  get(gj, "flange_height_max", g.flange_height_max);
  get(gj, "partial_width_p", g.partial_width_p);
  get(gj, "width_fraction_min", g.width_fraction_min);
  get(gj, "width_fraction_max", g.width_fraction_max);
  get(gj, "relief_width_factor", g.relief_width_factor);
  get(gj, "relief_depth_factor", g.relief_depth_factor);
  get(gj, "weight_rectangular", g.weight_rectangular);
  get(gj, "weight_slanted", g.weight_slanted);
  get(gj, "weight_rounded", g.weight_rounded);
  get(gj, "slant_min", g.slant_min);
  get(gj, "slant_max", g.slant_max);
  get(gj, "symmetry_p", g.symmetry_p);
  get(gj, "up_p", g.up_p);
  get(gj, "feasible_fraction", g.feasible_fraction);
  get(gj, "max_attempts", g.max_attempts);
  get(gj, "depth_decay", g.depth_decay);
  get(gj, "k_factor", g.k_factor);
  get(gj, "density", g.density);
  get(gj, "randomize_plane", g.randomize_plane);
  const json& tj = doc.at("tooling");
  ToolingSpec& t = g.tooling;
  get(tj, "punch_tip_angle", t.punch_tip_angle);
  get(tj, "punch_thickness", t.punch_thickness);
  get(tj, "punch_length", t.punch_length);
  get(tj, "punch_body_height", t.punch_body_height);
  get(tj, "die_opening", t.die_opening);
  get(tj, "die_block_width", t.die_block_width);
  get(tj, "die_block_height", t.die_block_height);
  get(tj, "contact_clearance", t.contact_clearance);
  const json& lj = doc.at("labeling");
  get(lj, "arc_step_deg", g.labeling.arc_step_deg);
  get(lj, "sweep_step_deg", g.labeling.sweep_step_deg);
  get(lj, "pen_tol_mm", g.labeling.pen_tol);
  get(lj, "area_eps_mm2", g.labeling.area_eps);
  const json& sj = doc.at("subset");
  get(sj, "name", c.subset.name);
  get(sj, "min_bends", c.subset.min_bends);
  get(sj, "max_bends", c.subset.max_bends);
  get(sj, "quota", c.subset.quota);
  const std::string balance = sj.at("balance").get<std::string>();
  if (balance == "tool_collision") {
    c.subset.balance = BalanceLabel::tool_collision;
  } else if (balance == "unfold_overlap") {
    c.subset.balance = BalanceLabel::unfold_overlap;
  } else {
    throw ConfigError("subset.balance must be tool_collision or unfold_overlap");
  }
  get(sj, "require_no_unfold_overlap", c.subset.require_no_unfold_overlap);
  get(sj, "starvation_factor", c.subset.starvation_factor);
  get(doc, "seed", c.seed);
  get(doc, "output_dir", c.output_dir);

  if (c.subset.name.empty() || c.subset.name.find('/') != std::string::npos) {
    throw ConfigError("subset.name must be a plain directory name");
  }
  if (c.subset.quota < 1) throw ConfigError("subset.quota must be >= 1");
  if (c.subset.min_bends < 1 || c.subset.max_bends < c.subset.min_bends) {
    throw ConfigError("subset bend range must be non-empty and start at >= 1");
  }
  if (!(c.subset.starvation_factor > 0)) throw ConfigError("subset.starvation_factor must be positive");
  try {
    check_gen_config(c.gen);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return c;
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("override '" + assignment + "' is not KEY=VALUE");
  std::string key = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);
  if (key.rfind("sampler.", 0) == 0) key = "gen." + key.substr(8);

  json value;
  try {
    value = json::parse(raw);
  } catch (const json::parse_error&) {
    value = raw;
  }
  json patch = value;
  std::string::size_type end = key.size();
  while (true) {
    const auto dot = key.rfind('.', end - 1);
    const std::string part = key.substr(dot == std::string::npos ? 0 : dot + 1,
                                        end - (dot == std::string::npos ? 0 : dot + 1));
    if (part.empty()) throw ConfigError("malformed override key '" + key + "'");
    patch = json{{part, patch}};
    if (dot == std::string::npos) break;
    end = dot;
  }
  json schema = run_config_to_json(RunConfig{});
  merge_checked(schema, doc, "");
  merge_checked(schema, patch, "");
  doc = std::move(schema);
}

RunConfig load_run_config(const std::string& path, const std::vector<std::string>& overrides) {
  json doc = json::object();
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path);
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ConfigError(path + ": " + e.what());
    }
  }
  for (const std::string& o : overrides) apply_override(doc, o);
  return run_config_from_json(doc);
}

std::string config_hash(const RunConfig& c) {
  json doc = run_config_to_json(c);
  doc.erase("output_dir");
  const std::string text = doc.dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace bendforge
