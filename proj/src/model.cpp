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

#include "bendforge/model.hpp"

#include <algorithm>
#include <cmath>

#include "bendforge/forming.hpp"

namespace bendforge {

namespace {

constexpr double kLengthTol = 1e-9;

// How far notch rectangles extend past the edge, so the cut is not flush.
constexpr double kNotchOvershoot = 1.0;

void append_quarter_arc(std::vector<Vec2>& out, Vec2 center, double radius, double a0_deg,
                        double a1_deg, double step_deg) {
  const int n = std::max(1, static_cast<int>(std::ceil((a1_deg - a0_deg) / step_deg - 1e-9)));
  for (int k = 0; k <= n; ++k) {
    const double a = deg2rad(a0_deg + (a1_deg - a0_deg) * k / n);
    out.push_back(center + Vec2{std::cos(a), std::sin(a)} * radius);
  }
}

Polygon2 flange_outline(const BendSpec& b, double arc_step_deg) {
  const double w = b.width;
  const double h = b.flange_height;
  switch (b.flange_type) {
    case FlangeType::rectangular:
      return rectangle(0, 0, w, h);
    case FlangeType::slanted:
      return Polygon2{{{0, 0}, {w, 0}, {w, h - w * std::tan(deg2rad(b.slant_angle))}, {0, h}}};
    case FlangeType::rounded: {
      const double r = std::min(w / 2, h);
      std::vector<Vec2> v{{0, 0}, {w, 0}};
      append_quarter_arc(v, {w - r, h - r}, r, 0, 90, arc_step_deg);
      append_quarter_arc(v, {r, h - r}, r, 90, 180, arc_step_deg);
      return cleaned(Polygon2{std::move(v)});
    }
  }
  return {};
}

bool is_full_width(double offset, double width, double edge_length) {
  return offset <= kLengthTol && std::abs(width - edge_length) <= kLengthTol;
}

// Per-face depth (bends between the face and the base).
std::vector<int> face_depths(const PartDesign& design, std::size_t prefix) {
  std::vector<int> depth(prefix + 1, 0);
  for (std::size_t b = 0; b < prefix; ++b) {
    const int pf = design.bends[b].parent_face;
    depth[b + 1] = (pf >= 0 && pf <= static_cast<int>(b)) ? depth[pf] + 1 : 1;
  }
  return depth;
}

}  // namespace

EdgeSegment PartGeometry::edge(EdgeRef ref) const {
  const Polygon2& p = faces.at(ref.face).nominal;
  const std::size_t n = p.size();
  const std::size_t i = static_cast<std::size_t>(ref.edge);
  if (ref.edge < 0 || i >= n) throw GeometryError("edge index out of range");
  return {p[i], p[(i + 1) % n]};
}

Polygon2 nominal_outline(const PartDesign& design, FaceId face, double arc_step_deg) {
  if (face == 0) return rectangle(0, 0, design.sheet.length, design.sheet.width);
  return flange_outline(design.bends.at(face - 1), arc_step_deg);
}

std::vector<Polygon2> relief_notches(const PartDesign& design, int bend_index, double arc_step_deg) {
  const BendSpec& b = design.bends.at(bend_index);
  if (!b.relief) return {};
  const Polygon2 parent = nominal_outline(design, b.parent_face, arc_step_deg);
  const std::size_t n = parent.size();
  const Vec2 p0 = parent[b.parent_edge];
  const Vec2 p1 = parent[(b.parent_edge + 1) % n];
  const Vec2 d = normalized(p1 - p0);
  const Vec2 w = right_perp(d);
  const double nw = b.relief->notch_width;
  const double nd = b.relief->notch_depth;
  auto notch = [&](double s0, double s1) {
    const Vec2 a = p0 + d * s0;
    const Vec2 c = p0 + d * s1;
    return cleaned(Polygon2{{a + w * kNotchOvershoot, a - w * nd, c - w * nd, c + w * kNotchOvershoot}});
  };
  return {notch(b.offset - nw, b.offset), notch(b.offset + b.width, b.offset + b.width + nw)};
}

PartGeometry build_part_geometry(const PartDesign& design, double arc_step_deg) {
  PartGeometry g;
  g.faces.resize(design.face_count());
  for (std::size_t f = 0; f < g.faces.size(); ++f) {
    g.faces[f].nominal = nominal_outline(design, static_cast<FaceId>(f), arc_step_deg);
    g.faces[f].cut = g.faces[f].nominal;
    g.faces[f].source_bend = static_cast<int>(f) - 1;
    if (g.faces[f].nominal.size() < 3 || signed_area(g.faces[f].nominal) <= 0 ||
        !is_simple(g.faces[f].nominal)) {
      throw ConstructionError(static_cast<int>(f) - 1, "degenerate flange outline");
    }
  }
  for (std::size_t i = 0; i < design.bends.size(); ++i) {
    const BendSpec& b = design.bends[i];
    const int bi = static_cast<int>(i);
    if (b.parent_face < 0 || b.parent_face > bi) throw ConstructionError(bi, "parent face does not exist");
    FaceGeometry& parent = g.faces[b.parent_face];
    if (b.parent_edge < 0 || b.parent_edge >= static_cast<int>(parent.nominal.size())) {
      throw ConstructionError(bi, "parent edge does not exist");
    }
    if (!b.relief) continue;
    const double len = g.edge({b.parent_face, b.parent_edge}).length();
    const double nw = b.relief->notch_width;
    if (b.offset - nw < -kLengthTol || b.offset + b.width + nw > len + kLengthTol) {
      throw ConstructionError(bi, "relief notch exceeds edge");
    }
    for (const Polygon2& notch : relief_notches(design, bi, arc_step_deg)) {
      // The part of the notch inside the face must be the full notch body.
      const double inside = intersection_area(notch, parent.nominal);
      const double body = nw * b.relief->notch_depth;
      if (std::abs(inside - body) > 1e-6 * std::max(1.0, body)) {
        throw ConstructionError(bi, "relief notch exceeds face");
      }
      std::vector<Polygon2> rest;
      try {
        rest = polygon_boolean(parent.cut, notch, BooleanOp::difference);
      } catch (const GeometryError& e) {
        throw ConstructionError(bi, std::string("relief cut failed: ") + e.what());
      }
      if (rest.size() != 1) throw ConstructionError(bi, "relief notch splits face");
      parent.cut = rest.front();
    }
  }
  return g;
}

EdgePool eligible_edges(const PartDesign& design, std::size_t prefix) {
  prefix = std::min(prefix, design.bends.size());
  PartDesign head = design;
  head.bends.resize(prefix);
  const std::vector<int> depth = face_depths(head, prefix);

  std::vector<Polygon2> outlines(prefix + 1);
  for (std::size_t f = 0; f <= prefix; ++f) outlines[f] = nominal_outline(head, static_cast<FaceId>(f));

  std::map<EdgeRef, int> free;  // edge -> depth
  for (int e = 0; e < 4; ++e) free[{0, e}] = 0;
  for (std::size_t b = 0; b < prefix; ++b) {
    const BendSpec& spec = head.bends[b];
    free.erase({spec.parent_face, spec.parent_edge});
    if (spec.flange_type == FlangeType::rounded) continue;
    const FaceId f = flange_face(static_cast<int>(b));
    for (int e = 1; e < 4; ++e) free[{f, e}] = depth[f];
  }

  // Flat-pattern placement gives every edge a stable position in the base plane.
  PartGeometry geometry;
  geometry.faces.resize(prefix + 1);
  for (std::size_t f = 0; f <= prefix; ++f) geometry.faces[f].nominal = outlines[f];
  const std::vector<PlaneFrame2> flat = flat_frames(head, geometry);
  const Frame base = base_frame(head.sheet.plane);

  EdgePool pool;
  for (const auto& [ref, d] : free) {
    const EdgeSegment seg = geometry.edge(ref);
    EdgeEntry entry;
    entry.length = seg.length();
    entry.depth = d;
    entry.start = base.point(flat[ref.face].point(seg.start));
    entry.end = base.point(flat[ref.face].point(seg.end));
    pool.emplace(ref, entry);
  }
  return pool;
}

std::vector<Violation> validate(const PartDesign& design) {
  std::vector<Violation> out;
  auto report = [&](int bend, std::string code, std::string message) {
    out.push_back({bend, std::move(code), std::move(message)});
  };
  const auto finite_positive = [](double x) { return std::isfinite(x) && x > 0; };

  if (!finite_positive(design.sheet.length) || !finite_positive(design.sheet.width)) {
    report(-1, "sheet dimensions", "sheet length and width must be positive");
  }
  if (!finite_positive(design.material.thickness)) report(-1, "thickness", "thickness must be positive");
  if (!(design.material.k_factor >= 0.3 && design.material.k_factor <= 0.5)) {
    report(-1, "k factor", "k_factor must lie in [0.3, 0.5]");
  }
  if (!finite_positive(design.material.density)) report(-1, "density", "density must be positive");
  if (!out.empty()) return out;

  for (std::size_t i = 0; i < design.bends.size(); ++i) {
    const BendSpec& b = design.bends[i];
    const int bi = static_cast<int>(i);
    bool edge_ok = true;
    if (b.parent_face < 0 || b.parent_face > bi) {
      report(bi, "unknown face", "parent face " + std::to_string(b.parent_face) + " does not exist yet");
      edge_ok = false;
    } else if (b.parent_face > 0 &&
               design.bends[b.parent_face - 1].flange_type == FlangeType::rounded) {
      report(bi, "terminal flange", "rounded flange of bend " + std::to_string(b.parent_face - 1) +
                                        " cannot host further bends");
      edge_ok = false;
    } else if (b.parent_edge < 0 || b.parent_edge > 3 || (b.parent_face > 0 && b.parent_edge == 0)) {
      report(bi, "unknown edge", "edge " + std::to_string(b.parent_edge) + " is not a free edge");
      edge_ok = false;
    } else if (eligible_edges(design, i).count({b.parent_face, b.parent_edge}) == 0) {
      report(bi, "edge not eligible", "edge already bent earlier in the sequence");
      edge_ok = false;
    }

    if (!(b.angle > 0 && b.angle <= 180)) report(bi, "angle out of range", "angle must lie in (0, 180]");
    if (!finite_positive(b.radius)) report(bi, "radius", "radius must be positive");
    if (!finite_positive(b.flange_height)) report(bi, "flange height", "flange height must be positive");
    if (!finite_positive(b.width)) report(bi, "width", "bend width must be positive");
    if (!(std::isfinite(b.offset) && b.offset >= 0)) report(bi, "offset", "offset must be non-negative");
    if (b.mirror_of && (*b.mirror_of < 0 || *b.mirror_of >= bi)) {
      report(bi, "mirror reference", "mirror_of must name an earlier bend");
    }
    if (b.flange_type == FlangeType::slanted) {
      const double s = b.slant_angle;
      if (!(s > 0 && s < 90)) {
        report(bi, "slant angle", "slant angle must lie in (0, 90)");
      } else if (b.flange_height - b.width * std::tan(deg2rad(s)) <= 0) {
        report(bi, "slant too steep", "slanted side edge would vanish");
      }
    }
    if (b.relief && (!finite_positive(b.relief->notch_width) || !finite_positive(b.relief->notch_depth))) {
      report(bi, "relief dimensions", "relief notch dimensions must be positive");
    }
    if (!edge_ok) continue;

    const double len = norm(nominal_outline(design, b.parent_face)[(b.parent_edge + 1) % 4] -
                            nominal_outline(design, b.parent_face)[b.parent_edge]);
    if (b.width > len - b.offset + kLengthTol) {
      report(bi, "width exceeds edge", "bend width exceeds the remaining edge length");
      continue;
    }
    const bool full = is_full_width(b.offset, b.width, len);
    if (!full && !b.relief) report(bi, "missing relief", "partial-width bend requires a relief");
    if (full && b.relief) report(bi, "unexpected relief", "full-width bend must not carry a relief");
  }
  if (!out.empty()) return out;

  try {
    build_part_geometry(design);
  } catch (const ConstructionError& e) {
    report(e.bend_index(), "construction", e.what());
  }
  return out;
}

std::optional<int> symmetric_counterpart(const PartDesign& design, std::size_t prefix, FaceId face,
                                         int edge) {
  if (face < 0 || face > static_cast<int>(std::min(prefix, design.bends.size()))) return std::nullopt;
  const EdgePool pool = eligible_edges(design, prefix);
  const Polygon2 outline = nominal_outline(design, face);
  const std::size_t n = outline.size();
  if (edge < 0 || static_cast<std::size_t>(edge) >= n) return std::nullopt;
  const Vec2 p0 = outline[edge];
  const Vec2 p1 = outline[(edge + 1) % n];
  const Vec2 d = normalized(p1 - p0);
  const Vec2 w = right_perp(d);
  const Vec2 c = centroid(outline);
  auto reflect = [&](Vec2 p) { return p - w * (2 * dot(p - c, w)); };
  const Vec2 r0 = reflect(p0);
  const Vec2 r1 = reflect(p1);
  constexpr double tol = 1e-6;
  for (std::size_t e = 0; e < n; ++e) {
    if (static_cast<int>(e) == edge || pool.count({face, static_cast<int>(e)}) == 0) continue;
    const Vec2 q0 = outline[e];
    const Vec2 q1 = outline[(e + 1) % n];
    if (std::abs(norm(q1 - q0) - norm(p1 - p0)) > tol) continue;
    // Reflection reverses orientation, so the mirrored edge runs r1 -> r0.
    if (norm(q0 - r1) <= tol && norm(q1 - r0) <= tol) return static_cast<int>(e);
  }
  return std::nullopt;
}

std::string to_string(SheetPlane p) {
  switch (p) {
    case SheetPlane::XY: return "XY";
    case SheetPlane::YZ: return "YZ";
    case SheetPlane::XZ: return "XZ";
  }
  return "?";
}

std::string to_string(BendDirection d) { return d == BendDirection::up ? "up" : "down"; }

std::string to_string(FlangeType t) {
  switch (t) {
    case FlangeType::rectangular: return "rectangular";
    case FlangeType::slanted: return "slanted";
    case FlangeType::rounded: return "rounded";
  }
  return "?";
}

SheetPlane sheet_plane_from_string(const std::string& s) {
  if (s == "XY") return SheetPlane::XY;
  if (s == "YZ") return SheetPlane::YZ;
  if (s == "XZ") return SheetPlane::XZ;
  throw std::invalid_argument("unknown sheet plane: " + s);
}

BendDirection bend_direction_from_string(const std::string& s) {
  if (s == "up") return BendDirection::up;
  if (s == "down") return BendDirection::down;
  throw std::invalid_argument("unknown bend direction: " + s);
}

FlangeType flange_type_from_string(const std::string& s) {
  if (s == "rectangular") return FlangeType::rectangular;
  if (s == "slanted") return FlangeType::slanted;
  if (s == "rounded") return FlangeType::rounded;
  throw std::invalid_argument("unknown flange type: " + s);
}

}  // namespace bendforge
