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

#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace oracle {

namespace {

constexpr double kShiftX = 0.3183098861837907;  // 1/pi
constexpr double kShiftY = 0.3678794411714423;  // 1/e

struct Box {
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
  double x1 = -std::numeric_limits<double>::infinity(), y1 = x1;
  void add(const Polygon2& p) {
    for (const Vec2& v : p.vertices) {
      x0 = std::min(x0, v.x), y0 = std::min(y0, v.y);
      x1 = std::max(x1, v.x), y1 = std::max(y1, v.y);
    }
  }
};

template <class F>
double raster(const Box& b, double cell, F covered) {
  if (!(b.x0 < b.x1 && b.y0 < b.y1)) return 0.0;
  const long i0 = static_cast<long>(std::floor(b.x0 / cell)) - 1;
  const long i1 = static_cast<long>(std::ceil(b.x1 / cell)) + 1;
  const long j0 = static_cast<long>(std::floor(b.y0 / cell)) - 1;
  const long j1 = static_cast<long>(std::ceil(b.y1 / cell)) + 1;
  long hits = 0;
  for (long i = i0; i <= i1; ++i) {
    for (long j = j0; j <= j1; ++j) {
      if (covered(Vec2{(i + kShiftX) * cell, (j + kShiftY) * cell})) ++hits;
    }
  }
  return static_cast<double>(hits) * cell * cell;
}

Vec3 sub(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
double det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) + a.z * (b.x * c.y - b.y * c.x);
}
// Sign of the tetrahedron (a, b, c, d) volume.
double orient(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return det3(sub(b, a), sub(c, a), sub(d, a));
}
double len(const Vec3& a) { return std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z); }

using Tri = std::array<Vec3, 3>;

Tri tri(const TriMesh& m, std::size_t i) {
  const auto& t = m.triangles[i];
  return {m.vertices[t[0]], m.vertices[t[1]], m.vertices[t[2]]};
}

// Pulls each vertex toward the incenter so every edge moves inward by d.
bool shrink(Tri& t, double d) {
  if (d <= 0) return true;
  const double la = len(sub(t[2], t[1]));
  const double lb = len(sub(t[0], t[2]));
  const double lc = len(sub(t[1], t[0]));
  const double per = la + lb + lc;
  const Vec3 e1 = sub(t[1], t[0]);
  const Vec3 e2 = sub(t[2], t[0]);
  const Vec3 cr{e1.y * e2.z - e1.z * e2.y, e1.z * e2.x - e1.x * e2.z, e1.x * e2.y - e1.y * e2.x};
  const double r = len(cr) / per;  // 2 * area / perimeter
  if (per <= 0 || r <= d) return false;
  Vec3 ic{(t[0].x * la + t[1].x * lb + t[2].x * lc) / per, (t[0].y * la + t[1].y * lb + t[2].y * lc) / per,
          (t[0].z * la + t[1].z * lb + t[2].z * lc) / per};
  const double s = 1 - d / r;
  for (Vec3& v : t) v = {ic.x + (v.x - ic.x) * s, ic.y + (v.y - ic.y) * s, ic.z + (v.z - ic.z) * s};
  return true;
}

// Proper crossing of segment pq through the interior of triangle t.
bool segment_crosses(const Vec3& p, const Vec3& q, const Tri& t) {
  const double sp = orient(t[0], t[1], t[2], p);
  const double sq = orient(t[0], t[1], t[2], q);
  const double scale = len(sub(t[1], t[0])) * len(sub(t[2], t[0])) * len(sub(q, p)) + 1e-300;
  const double eps = 1e-12 * scale;
  if ((sp > eps && sq > eps) || (sp < -eps && sq < -eps)) return false;
  if (std::abs(sp) <= eps && std::abs(sq) <= eps) return false;  // coplanar: not a penetration
  const double a = orient(p, q, t[0], t[1]);
  const double b = orient(p, q, t[1], t[2]);
  const double c = orient(p, q, t[2], t[0]);
  return (a >= 0 && b >= 0 && c >= 0) || (a <= 0 && b <= 0 && c <= 0);
}

bool tris_cross(const Tri& x, const Tri& y) {
  for (int k = 0; k < 3; ++k) {
    if (segment_crosses(x[k], x[(k + 1) % 3], y)) return true;
    if (segment_crosses(y[k], y[(k + 1) % 3], x)) return true;
  }
  return false;
}

double point_segment(const Vec3& p, const Vec3& a, const Vec3& b) {
  const Vec3 ab = sub(b, a);
  const double l2 = ab.x * ab.x + ab.y * ab.y + ab.z * ab.z;
  double s = l2 > 0 ? ((p.x - a.x) * ab.x + (p.y - a.y) * ab.y + (p.z - a.z) * ab.z) / l2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return len(sub(p, {a.x + ab.x * s, a.y + ab.y * s, a.z + ab.z * s}));
}

double point_triangle(const Vec3& p, const Tri& t) {
  const Vec3 e1 = sub(t[1], t[0]);
  const Vec3 e2 = sub(t[2], t[0]);
  Vec3 n{e1.y * e2.z - e1.z * e2.y, e1.z * e2.x - e1.x * e2.z, e1.x * e2.y - e1.y * e2.x};
  const double nl = len(n);
  double best = std::min({point_segment(p, t[0], t[1]), point_segment(p, t[1], t[2]), point_segment(p, t[2], t[0])});
  if (nl == 0) return best;
  n = {n.x / nl, n.y / nl, n.z / nl};
  const double h = (p.x - t[0].x) * n.x + (p.y - t[0].y) * n.y + (p.z - t[0].z) * n.z;
  const Vec3 f{p.x - n.x * h, p.y - n.y * h, p.z - n.z * h};
  const double a = orient(t[0], t[1], f, {f.x + n.x, f.y + n.y, f.z + n.z});
  const double b = orient(t[1], t[2], f, {f.x + n.x, f.y + n.y, f.z + n.z});
  const double c = orient(t[2], t[0], f, {f.x + n.x, f.y + n.y, f.z + n.z});
  if ((a >= 0 && b >= 0 && c >= 0) || (a <= 0 && b <= 0 && c <= 0)) best = std::min(best, std::abs(h));
  return best;
}

bool box_inside(const TriMesh& inner, const TriMesh& outer, double tol) {
  Vec3 lo{1e300, 1e300, 1e300}, hi{-1e300, -1e300, -1e300};
  for (const Vec3& v : outer.vertices) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
  }
  for (const Vec3& v : inner.vertices) {
    if (v.x < lo.x - tol || v.y < lo.y - tol || v.z < lo.z - tol || v.x > hi.x + tol || v.y > hi.y + tol ||
        v.z > hi.z + tol) {
      return false;
    }
  }
  return true;
}

bool nested(const TriMesh& inner, const TriMesh& outer, double pen_tol) {
  if (inner.triangles.empty() || outer.triangles.empty() || !box_inside(inner, outer, pen_tol)) return false;
  std::vector<Vec3> probes = inner.vertices;
  for (std::size_t i = 0; i < inner.triangles.size(); ++i) {
    const Tri t = tri(inner, i);
    probes.push_back({(t[0].x + t[1].x + t[2].x) / 3, (t[0].y + t[1].y + t[2].y) / 3,
                      (t[0].z + t[1].z + t[2].z) / 3});
  }
  for (const Vec3& p : probes) {
    if (surface_distance(outer, p) <= pen_tol) continue;
    return winding_number(outer, p) > 0.5;
  }
  return false;
}

}  // namespace

bool inside(const Polygon2& p, Vec2 q) {
  bool in = false;
  const std::size_t n = p.vertices.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = p.vertices[i];
    const Vec2& b = p.vertices[j];
    if ((a.y > q.y) != (b.y > q.y) && q.x < (b.x - a.x) * (q.y - a.y) / (b.y - a.y) + a.x) in = !in;
  }
  return in;
}

double raster_area(const std::vector<Polygon2>& polys, double cell) {
  Box b;
  for (const Polygon2& p : polys) b.add(p);
  return raster(b, cell, [&](Vec2 q) {
    return std::any_of(polys.begin(), polys.end(), [&](const Polygon2& p) { return inside(p, q); });
  });
}

double raster_intersection_area(const Polygon2& a, const Polygon2& b, double cell) {
  Box ba, bb;
  ba.add(a);
  bb.add(b);
  const Box box{std::max(ba.x0, bb.x0), std::max(ba.y0, bb.y0), std::min(ba.x1, bb.x1), std::min(ba.y1, bb.y1)};
  return raster(box, cell, [&](Vec2 q) { return inside(a, q) && inside(b, q); });
}

double polyline_length(const std::vector<Vec2>& pts) {
  double s = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) s += std::hypot(pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y);
  return s;
}

double volume(const TriMesh& m) {
  double v = 0;
  for (std::size_t i = 0; i < m.triangles.size(); ++i) {
    const Tri t = tri(m, i);
    v += det3(t[0], t[1], t[2]);
  }
  return v / 6.0;
}

double winding_number(const TriMesh& m, const Vec3& p) {
  // Van Oosterom-Strackee solid angle per triangle.
  double total = 0;
  for (std::size_t i = 0; i < m.triangles.size(); ++i) {
    const Tri t = tri(m, i);
    const Vec3 a = sub(t[0], p), b = sub(t[1], p), c = sub(t[2], p);
    const double la = len(a), lb = len(b), lc = len(c);
    const double num = det3(a, b, c);
    const double den = la * lb * lc + (a.x * b.x + a.y * b.y + a.z * b.z) * lc +
                       (b.x * c.x + b.y * c.y + b.z * c.z) * la + (c.x * a.x + c.y * a.y + c.z * a.z) * lb;
    total += 2 * std::atan2(num, den);
  }
  return total / (4 * 3.14159265358979323846);
}

double surface_distance(const TriMesh& m, const Vec3& p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m.triangles.size(); ++i) best = std::min(best, point_triangle(p, tri(m, i)));
  return best;
}

bool brute_overlap(const TriMesh& a, const TriMesh& b, double pen_tol) {
  for (std::size_t i = 0; i < a.triangles.size(); ++i) {
    const Tri ta = tri(a, i);
    Tri sa = ta;
    const bool sa_ok = shrink(sa, pen_tol);
    for (std::size_t j = 0; j < b.triangles.size(); ++j) {
      const Tri tb = tri(b, j);
      Tri sb = tb;
      if (shrink(sb, pen_tol) && tris_cross(ta, sb)) return true;
      if (sa_ok && tris_cross(sa, tb)) return true;
    }
  }
  return nested(a, b, pen_tol) || nested(b, a, pen_tol);
}

RasterOverlap raster_unfold_overlap(const UnfoldedPattern& p, const PartDesign& d, double cell) {
  using bendforge::PatternKind;
  // Piece id: faces by face id, strips offset past every face.
  const int nf = static_cast<int>(d.bends.size()) + 1;
  auto id = [&](const bendforge::PatternFace& f) { return f.kind == PatternKind::face ? f.source + 1 : nf + f.source; };
  auto joined = [&](int x, int y) {
    if (x > y) std::swap(x, y);
    if (y < nf || x >= nf) return false;
    const int bend = y - nf;
    return x == d.bends[bend].parent_face || x == bend + 1;
  };
  RasterOverlap out;
  for (std::size_t i = 0; i < p.faces.size(); ++i) {
    for (std::size_t j = i + 1; j < p.faces.size(); ++j) {
      if (joined(id(p.faces[i]), id(p.faces[j]))) continue;
      const double a = raster_intersection_area(p.faces[i].polygon, p.faces[j].polygon, cell);
      out.max_area = std::max(out.max_area, a);
      if (a > 0) out.overlap = true;
    }
  }
  return out;
}

}  // namespace oracle
