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

#include "bendforge/forming.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bendforge {

namespace {

constexpr double kPieceEps = 1e-12;

Polygon2 transformed(const Polygon2& p, const PlaneFrame2& f) {
  Polygon2 out;
  out.vertices.reserve(p.size());
  for (const Vec2& v : p.vertices) out.vertices.push_back(f.point(v));
  return out;
}

TriMesh extrude_or_throw(const Polygon2& profile, const Frame& frame, double length, int bend) {
  try {
    return extrude(profile, frame, length);
  } catch (const GeometryError& e) {
    throw ConstructionError(bend, e.what());
  }
}

}  // namespace

double bend_allowance(double angle_deg, double radius, double k_factor, double thickness) {
  if (!(k_factor >= 0.3 && k_factor <= 0.5)) throw std::invalid_argument("k_factor outside [0.3, 0.5]");
  if (!(angle_deg >= 0)) throw std::invalid_argument("negative bend angle");
  if (!(radius > 0) || !(thickness > 0)) throw std::invalid_argument("radius and thickness must be positive");
  return (kPi / 180.0) * angle_deg * (radius + k_factor * thickness);
}

AngleAssignment final_angles(const PartDesign& design) {
  AngleAssignment a;
  a.reserve(design.bends.size());
  for (const BendSpec& b : design.bends) a.push_back(b.angle);
  return a;
}

AngleAssignment flat_angles(const PartDesign& design) { return AngleAssignment(design.bends.size(), 0.0); }

Frame base_frame(SheetPlane plane) {
  Frame f;
  switch (plane) {
    case SheetPlane::XY:
      f.u = {1, 0, 0}, f.v = {0, 1, 0}, f.n = {0, 0, 1};
      break;
    case SheetPlane::YZ:
      f.u = {0, 1, 0}, f.v = {0, 0, 1}, f.n = {1, 0, 0};
      break;
    case SheetPlane::XZ:
      f.u = {0, 0, 1}, f.v = {1, 0, 0}, f.n = {0, 1, 0};
      break;
  }
  return f;
}

std::vector<PlaneFrame2> flat_frames(const PartDesign& design, const PartGeometry& geometry) {
  std::vector<PlaneFrame2> frames(design.bends.size() + 1);
  for (std::size_t i = 0; i < design.bends.size(); ++i) {
    const BendSpec& b = design.bends[i];
    const PlaneFrame2& parent = frames.at(b.parent_face);
    const EdgeSegment seg = geometry.edge({b.parent_face, b.parent_edge});
    const Vec2 d = seg.direction();
    const Vec2 w = seg.outward();
    const double ba = bend_allowance(b.angle, b.radius, design.material.k_factor, design.material.thickness);
    PlaneFrame2& child = frames[i + 1];
    child.origin = parent.point(seg.start + d * (b.offset + b.width) + w * ba);
    child.u = parent.dir(d * -1.0);
    child.v = parent.dir(w);
  }
  return frames;
}

Vec2 BendSection::center() const {
  const double z_concave = sigma > 0 ? thickness : 0.0;
  return {strip, z_concave + sigma * radius};
}

Vec2 BendSection::radial(double alpha_deg) const {
  const double a = deg2rad(alpha_deg);
  return {std::sin(a), -sigma * std::cos(a)};
}

Vec2 BendSection::arc_point(double rho, double alpha_deg) const { return center() + radial(alpha_deg) * rho; }

Vec3 BendSection::world(double along, const Vec2& sz) const {
  return parent.point(edge_start + edge_dir * along + outward() * sz.x, sz.y);
}

Vec3 BendSection::world_dir(const Vec2& sz) const { return parent.dir(outward()) * sz.x + parent.n * sz.y; }

Frame BendSection::section_frame(double along) const {
  Frame f;
  f.origin = parent.point(edge_start + edge_dir * along);
  f.u = parent.dir(outward());
  f.v = parent.n;
  f.n = edge_dir3() * -1.0;
  return f;
}

FormedState form(const PartDesign& design, const PartGeometry& geometry, const AngleAssignment& angles) {
  if (angles.size() != design.bends.size()) throw std::invalid_argument("angle assignment size mismatch");
  FormedState s;
  s.frames.resize(design.face_count());
  s.frames[0] = base_frame(design.sheet.plane);
  s.sections.reserve(design.bends.size());
  const double t = design.material.thickness;
  const double k = design.material.k_factor;
  for (std::size_t i = 0; i < design.bends.size(); ++i) {
    const BendSpec& b = design.bends[i];
    const double theta = angles[i];
    if (!(theta >= 0 && theta <= b.angle + 1e-9)) {
      throw std::invalid_argument("angle for bend " + std::to_string(i) + " outside [0, final]");
    }
    const EdgeSegment seg = geometry.edge({b.parent_face, b.parent_edge});
    BendSection sec;
    sec.bend = static_cast<int>(i);
    sec.parent = s.frames.at(b.parent_face);
    sec.edge_start = seg.start;
    sec.edge_dir = seg.direction();
    sec.offset = b.offset;
    sec.width = b.width;
    sec.angle = theta;
    sec.sigma = b.direction == BendDirection::up ? 1.0 : -1.0;
    sec.radius = b.radius;
    sec.thickness = t;
    sec.k_factor = k;
    sec.strip = 0.5 * (bend_allowance(b.angle, b.radius, k, t) - bend_allowance(theta, b.radius, k, t));

    // Child bottom surface leaves the arc at the bottom radius, then runs one
    // strip length along the end tangent.
    const double rho_bottom = sec.sigma > 0 ? b.radius + t : b.radius;
    const double a = deg2rad(theta);
    const Vec2 tangent{std::cos(a), sec.sigma * std::sin(a)};
    const Vec2 normal{-sec.sigma * std::sin(a), std::cos(a)};
    const Vec2 origin = sec.arc_point(rho_bottom, theta) + tangent * sec.strip;

    Frame& child = s.frames[i + 1];
    child.origin = sec.world(b.offset + b.width, origin);
    child.u = sec.edge_dir3() * -1.0;
    child.v = sec.world_dir(tangent);
    child.n = sec.world_dir(normal);
    s.sections.push_back(sec);
  }
  return s;
}

TriMesh SolidSet::merged() const {
  TriMesh m;
  for (const Piece& p : pieces) m.append(p.mesh);
  return m;
}

SolidSet realize(const PartDesign& design, const AngleAssignment& angles, double arc_step_deg) {
  const PartGeometry geometry = build_part_geometry(design, arc_step_deg);
  return realize(design, geometry, form(design, geometry, angles), arc_step_deg);
}

SolidSet realize(const PartDesign& design, const PartGeometry& geometry, const FormedState& state,
                 double arc_step_deg) {
  const double t = design.material.thickness;
  SolidSet out;
  out.frames = state.frames;
  for (std::size_t f = 0; f < geometry.faces.size(); ++f) {
    const int src = static_cast<int>(f) - 1;
    out.pieces.push_back({extrude_or_throw(geometry.faces[f].cut, state.frames[f], t, src), PieceKind::slab, src});
  }
  for (const BendSection& sec : state.sections) {
    const Frame frame = sec.section_frame(sec.offset + sec.width);
    const double r = sec.radius;
    if (sec.strip > kPieceEps) {
      out.pieces.push_back({extrude_or_throw(rectangle(0, 0, sec.strip, t), frame, sec.width, sec.bend),
                            PieceKind::allowance_strip, sec.bend});
    }
    if (sec.angle > kPieceEps) {
      const int n = std::max(1, static_cast<int>(std::ceil(sec.angle / arc_step_deg - 1e-9)));
      Polygon2 profile;
      for (int k = 0; k <= n; ++k) profile.vertices.push_back(sec.arc_point(r + t, sec.angle * k / n));
      for (int k = n; k >= 0; --k) profile.vertices.push_back(sec.arc_point(r, sec.angle * k / n));
      out.pieces.push_back({extrude_or_throw(cleaned(profile), frame, sec.width, sec.bend), PieceKind::bend_shell,
                            sec.bend});
    }
    if (sec.strip > kPieceEps) {
      const double a = deg2rad(sec.angle);
      const Vec2 tangent{std::cos(a), sec.sigma * std::sin(a)};
      const Vec2 p = sec.arc_point(r, sec.angle);
      const Vec2 q = sec.arc_point(r + t, sec.angle);
      const Polygon2 profile = cleaned(Polygon2{{p, q, q + tangent * sec.strip, p + tangent * sec.strip}});
      out.pieces.push_back(
          {extrude_or_throw(profile, frame, sec.width, sec.bend), PieceKind::allowance_strip, sec.bend});
    }
  }
  return out;
}

UnfoldedPattern unfold(const PartDesign& design, double arc_step_deg) {
  const PartGeometry geometry = build_part_geometry(design, arc_step_deg);
  const std::vector<PlaneFrame2> flat = flat_frames(design, geometry);
  UnfoldedPattern p;
  p.thickness = design.material.thickness;
  p.frame = base_frame(design.sheet.plane);
  for (std::size_t f = 0; f < geometry.faces.size(); ++f) {
    p.faces.push_back({transformed(geometry.faces[f].cut, flat[f]), PatternKind::face, static_cast<int>(f) - 1});
  }
  for (std::size_t i = 0; i < design.bends.size(); ++i) {
    const BendSpec& b = design.bends[i];
    const EdgeSegment seg = geometry.edge({b.parent_face, b.parent_edge});
    const Vec2 d = seg.direction();
    const Vec2 w = seg.outward();
    const double ba = bend_allowance(b.angle, b.radius, design.material.k_factor, design.material.thickness);
    const Vec2 b0 = seg.start + d * b.offset;
    const Vec2 b1 = b0 + d * b.width;
    // d then w turns clockwise, so list the rectangle in reverse for CCW.
    const Polygon2 strip{{b0, b0 + w * ba, b1 + w * ba, b1}};
    p.faces.push_back({transformed(strip, flat[b.parent_face]), PatternKind::strip, static_cast<int>(i)});
  }
  return p;
}

double pattern_bbox_area(const UnfoldedPattern& p) {
  double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;
  for (const PatternFace& f : p.faces) {
    for (const Vec2& v : f.polygon.vertices) {
      x0 = std::min(x0, v.x), y0 = std::min(y0, v.y);
      x1 = std::max(x1, v.x), y1 = std::max(y1, v.y);
    }
  }
  return x1 >= x0 ? (x1 - x0) * (y1 - y0) : 0.0;
}

TriMesh pattern_mesh(const UnfoldedPattern& p) {
  TriMesh m;
  for (const PatternFace& f : p.faces) m.append(extrude(f.polygon, p.frame, p.thickness));
  return m;
}

SolidMetrics solid_metrics(const SolidSet& s) {
  SolidMetrics out;
  for (const Piece& p : s.pieces) {
    out.volume += mesh_volume(p.mesh);
    out.aabb.expand(mesh_aabb(p.mesh));
  }
  out.aabb_volume = out.aabb.volume();
  return out;
}

}  // namespace bendforge
