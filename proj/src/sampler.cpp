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

#include "bendforge/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bendforge {

using nlohmann::json;

void check_gen_config(const GenConfig& c) {
  auto fail = [](const std::string& f) { throw std::invalid_argument("invalid gen config: " + f); };
  auto prob = [&](double p, const char* f) {
    if (!(p >= 0 && p <= 1)) fail(f);
  };
  auto range = [&](double lo, double hi, const char* f) {
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo > 0 && lo <= hi)) fail(f);
  };
  range(c.sheet_dim_min, c.sheet_dim_max, "sheet_dim_min/max");
  range(c.thickness_min, c.thickness_max, "thickness_min/max");
  range(c.radius_factor_min, c.radius_factor_max, "radius_factor_min/max");
  range(c.width_fraction_min, c.width_fraction_max, "width_fraction_min/max");
  if (c.width_fraction_max > 1) fail("width_fraction_max");
  range(c.slant_min, c.slant_max, "slant_min/max");
  if (c.slant_max >= 90) fail("slant_max");
  if (!(c.flange_height_min > 0)) fail("flange_height_min");
  if (c.flange_height_max != 0 && !(c.flange_height_max >= c.flange_height_min)) fail("flange_height_max");
  if (c.angles.empty() || c.angles.size() != c.angle_weights.size()) fail("angles/angle_weights");
  for (double a : c.angles) {
    if (!(a > 0 && a <= 180)) fail("angles");
  }
  for (double w : c.angle_weights) {
    if (!(w > 0)) fail("angle_weights");
  }
  if (!(c.weight_rectangular > 0 && c.weight_slanted > 0 && c.weight_rounded > 0)) fail("flange type weights");
  prob(c.partial_width_p, "partial_width_p");
  prob(c.symmetry_p, "symmetry_p");
  prob(c.up_p, "up_p");
  prob(c.feasible_fraction, "feasible_fraction");
  if (!(c.depth_decay > 0 && c.depth_decay <= 1)) fail("depth_decay");
  if (c.max_attempts < 1) fail("max_attempts");
  if (!(c.k_factor >= 0.3 && c.k_factor <= 0.5)) fail("k_factor");
  if (!(c.density > 0)) fail("density");
  if (!(c.relief_width_factor > 0 && c.relief_depth_factor > 0)) fail("relief factors");
  if (!(c.labeling.sweep_step_deg > 0 && c.labeling.arc_step_deg > 0 && c.labeling.pen_tol >= 0 &&
        c.labeling.area_eps >= 0)) {
    fail("labeling");
  }
  check_tooling(c.tooling);
}

json provenance_to_json(const std::vector<ProvenanceEntry>& p) {
  json out = json::array();
  for (const ProvenanceEntry& e : p) {
    out.push_back({{"bend", e.bend},
                   {"face", e.edge.face},
                   {"edge", e.edge.edge},
                   {"edge_weight", e.edge_weight},
                   {"attempts", e.attempts},
                   {"quota", e.quota},
                   {"insertion_clear", e.insertion_clear ? json(*e.insertion_clear) : json(nullptr)},
                   {"mirrored_from", e.mirrored_from ? json(*e.mirrored_from) : json(nullptr)}});
  }
  return out;
}

std::vector<ProvenanceEntry> provenance_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("provenance must be an array");
  std::vector<ProvenanceEntry> out;
  try {
    for (const json& e : j) {
      ProvenanceEntry p;
      p.bend = e.at("bend").get<int>();
      p.edge = {e.at("face").get<int>(), e.at("edge").get<int>()};
      p.edge_weight = e.at("edge_weight").get<double>();
      p.attempts = e.at("attempts").get<int>();
      p.quota = e.at("quota").get<bool>();
      if (!e.at("insertion_clear").is_null()) p.insertion_clear = e.at("insertion_clear").get<bool>();
      if (!e.at("mirrored_from").is_null()) p.mirrored_from = e.at("mirrored_from").get<int>();
      out.push_back(p);
    }
  } catch (const json::exception& e) {
    throw SchemaError(std::string("provenance: ") + e.what());
  }
  return out;
}

namespace {

double flange_height_max(const GenConfig& c, const PartDesign& d) {
  const double hi = c.flange_height_max > 0 ? c.flange_height_max : std::max(d.sheet.length, d.sheet.width);
  return std::max(hi, c.flange_height_min);
}

// Largest slant keeping the short side edge at least half the flange height.
double max_slant(double width, double height) { return rad2deg(std::atan(0.5 * height / width)); }

std::optional<BendSpec> draw_bend(RngStream& rng, const GenConfig& c, const PartDesign& d, EdgeRef edge,
                                  double length) {
  const double t = d.material.thickness;
  BendSpec b;
  b.parent_face = edge.face;
  b.parent_edge = edge.edge;
  b.angle = c.angles[rng.weighted(c.angle_weights)];
  b.radius = t * rng.uniform(c.radius_factor_min, c.radius_factor_max);
  b.direction = rng.bernoulli(c.up_p) ? BendDirection::up : BendDirection::down;
  b.flange_height = rng.uniform(c.flange_height_min, flange_height_max(c, d));
  const double type_w[3] = {c.weight_rectangular, c.weight_slanted, c.weight_rounded};
  b.flange_type = static_cast<FlangeType>(rng.weighted(type_w));
  if (rng.bernoulli(c.partial_width_p)) {
    b.width = length * rng.uniform(c.width_fraction_min, c.width_fraction_max);
    const Relief relief{c.relief_width_factor * t, b.radius + c.relief_depth_factor * t};
    const double lo = relief.notch_width;
    const double hi = length - b.width - relief.notch_width;
    if (hi < lo) return std::nullopt;
    b.offset = rng.uniform(lo, hi);
    b.relief = relief;
  } else {
    b.offset = 0.0;
    b.width = length;
  }
  if (b.flange_type == FlangeType::slanted) {
    const double smax = std::min(c.slant_max, max_slant(b.width, b.flange_height));
    if (smax < c.slant_min) {
      b.flange_type = FlangeType::rectangular;
    } else {
      b.slant_angle = rng.uniform(c.slant_min, smax);
    }
  }
  return b;
}

// Accepts the candidate when it is valid and, for quota bends, passes the
// insertion check on the partial part.
bool accept(const PartDesign& cand, int index, bool quota, const GenConfig& c, std::optional<bool>& clear) {
  if (!validate(cand).empty()) return false;
  if (!quota) return true;
  try {
    clear = !check_bend(cand, index, c.tooling, c.labeling).collides;
  } catch (const ConstructionError&) {
    clear = false;
  }
  return *clear;
}

}  // namespace

SampledPart sample_part(std::uint64_t seed, const GenConfig& c, int n_bends) {
  if (n_bends < 1) throw std::invalid_argument("n_bends must be >= 1");
  check_gen_config(c);
  RngStream rng(seed);
  SampledPart out;
  PartDesign& d = out.design;
  d.seed = seed;
  d.sheet.length = rng.uniform(c.sheet_dim_min, c.sheet_dim_max);
  d.sheet.width = rng.uniform(c.sheet_dim_min, c.sheet_dim_max);
  d.material.thickness = rng.uniform(c.thickness_min, c.thickness_max);
  d.material.k_factor = c.k_factor;
  d.material.density = c.density;
  d.sheet.plane = c.randomize_plane ? static_cast<SheetPlane>(rng.index(3)) : SheetPlane::XY;

  // Pre-drawn quota subset via partial Fisher-Yates.
  const int q = std::min(n_bends, static_cast<int>(std::ceil(c.feasible_fraction * n_bends - 1e-9)));
  std::vector<int> order(n_bends);
  std::iota(order.begin(), order.end(), 0);
  std::vector<bool> in_quota(n_bends, false);
  for (int i = 0; i < q; ++i) {
    const std::size_t j = i + rng.index(n_bends - i);
    std::swap(order[i], order[j]);
    in_quota[order[i]] = true;
  }

  while (static_cast<int>(d.bends.size()) < n_bends) {
    const int k = static_cast<int>(d.bends.size());
    const EdgePool pool = eligible_edges(d, k);
    if (pool.empty()) throw SampleAborted("edge", k, "no eligible edge left for bend " + std::to_string(k));
    std::vector<EdgeRef> refs;
    std::vector<double> weights;
    for (const auto& [ref, e] : pool) {
      refs.push_back(ref);
      weights.push_back(edge_weight(e.length, e.depth, c.depth_decay));
    }

    ProvenanceEntry prov;
    prov.bend = k;
    prov.quota = in_quota[k];
    bool placed = false;
    for (int attempt = 1; attempt <= c.max_attempts && !placed; ++attempt) {
      const std::size_t pick = rng.weighted(weights);
      std::optional<BendSpec> b = draw_bend(rng, c, d, refs[pick], pool.at(refs[pick]).length);
      if (!b) continue;
      PartDesign cand = d;
      cand.bends.push_back(*b);
      std::optional<bool> clear;
      if (!accept(cand, k, prov.quota, c, clear)) continue;
      d = std::move(cand);
      prov.edge = refs[pick];
      prov.edge_weight = weights[pick];
      prov.attempts = attempt;
      prov.insertion_clear = clear;
      placed = true;
    }
    if (!placed) {
      throw SampleAborted(prov.quota ? "quota" : "edge", k,
                          "bend " + std::to_string(k) + " not placed after " + std::to_string(c.max_attempts) +
                              " attempts");
    }
    out.provenance.push_back(prov);

    if (static_cast<int>(d.bends.size()) >= n_bends || !rng.bernoulli(c.symmetry_p)) continue;
    const BendSpec& src = d.bends[k];
    const std::optional<int> mirror = symmetric_counterpart(d, k + 1, src.parent_face, src.parent_edge);
    if (!mirror) continue;
    const EdgePool mirror_pool = eligible_edges(d, k + 1);
    const double len = mirror_pool.at({src.parent_face, *mirror}).length;
    BendSpec m = src;
    m.parent_edge = *mirror;
    if (src.relief) {
      m.offset = len - src.offset - src.width;
    } else {
      m.offset = 0.0;
      m.width = len;
    }
    m.flange_height = rng.uniform(c.flange_height_min, flange_height_max(c, d));
    if (m.flange_type == FlangeType::slanted && m.slant_angle > max_slant(m.width, m.flange_height)) {
      m.flange_height = src.flange_height;
    }
    m.mirror_of = k;
    PartDesign cand = d;
    cand.bends.push_back(m);
    ProvenanceEntry mp;
    mp.bend = k + 1;
    mp.quota = in_quota[k + 1];
    std::optional<bool> clear;
    if (!accept(cand, k + 1, mp.quota, c, clear)) continue;
    d = std::move(cand);
    mp.edge = {m.parent_face, m.parent_edge};
    mp.edge_weight = edge_weight(len, mirror_pool.at(mp.edge).depth, c.depth_decay);
    mp.attempts = 1;
    mp.insertion_clear = clear;
    mp.mirrored_from = k;
    out.provenance.push_back(mp);
  }
  return out;
}

}  // namespace bendforge
