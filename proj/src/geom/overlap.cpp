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

#include "bendforge/geom/overlap.hpp"

#include <array>
#include <vector>

namespace bendforge {

namespace {

struct Interval {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  bool valid() const { return lo <= hi; }
};

// Parameter range along the projection axis where the triangle (vertex
// projections p, signed plane distances d) meets the other triangle's plane.
Interval crossing_interval(const std::array<double, 3>& p, const std::array<double, 3>& d) {
  Interval iv;
  auto add = [&](double x) {
    iv.lo = std::min(iv.lo, x);
    iv.hi = std::max(iv.hi, x);
  };
  for (int i = 0; i < 3; ++i) {
    if (d[i] == 0.0) add(p[i]);
    const int j = (i + 1) % 3;
    if ((d[i] > 0.0 && d[j] < 0.0) || (d[i] < 0.0 && d[j] > 0.0))
      add(p[i] + (p[j] - p[i]) * d[i] / (d[i] - d[j]));
  }
  return iv;
}

std::array<double, 3> plane_distances(const Triangle& t, const Vec3& n, const Vec3& on_plane) {
  std::array<double, 3> d{dot(n, t.a - on_plane), dot(n, t.b - on_plane), dot(n, t.c - on_plane)};
  for (double& x : d) {
    if (std::abs(x) < kPlaneEps) x = 0.0;
  }
  return d;
}

bool same_side(const std::array<double, 3>& d) {
  return (d[0] > 0 && d[1] > 0 && d[2] > 0) || (d[0] < 0 && d[1] < 0 && d[2] < 0);
}

bool ray_box(const Vec3& o, const Vec3& inv_dir, const Aabb& b) {
  double t0 = 0.0;
  double t1 = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 3; ++k) {
    double ta = (b.min[k] - o[k]) * inv_dir[k];
    double tb = (b.max[k] - o[k]) * inv_dir[k];
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    if (t0 > t1) return false;
  }
  return true;
}

enum class RayHit { miss, hit, ambiguous };

RayHit ray_triangle(const Vec3& o, const Vec3& dir, const Triangle& t) {
  constexpr double kEdgeEps = 1e-10;
  const Vec3 e1 = t.b - t.a;
  const Vec3 e2 = t.c - t.a;
  const Vec3 pv = cross(dir, e2);
  const double det = dot(e1, pv);
  if (std::abs(det) < 1e-14) return RayHit::miss;  // parallel; a tilted ray sees the neighbours
  const double inv = 1.0 / det;
  const Vec3 tv = o - t.a;
  const double u = dot(tv, pv) * inv;
  if (u < -kEdgeEps || u > 1 + kEdgeEps) return RayHit::miss;
  const Vec3 qv = cross(tv, e1);
  const double v = dot(dir, qv) * inv;
  if (v < -kEdgeEps || u + v > 1 + kEdgeEps) return RayHit::miss;
  const double dist = dot(e2, qv) * inv;
  if (dist < -kEdgeEps) return RayHit::miss;
  if (u < kEdgeEps || v < kEdgeEps || u + v > 1 - kEdgeEps || dist < kEdgeEps)
    return RayHit::ambiguous;
  return RayHit::hit;
}

// Returns the parity of crossings, or nullopt if the ray grazed an edge.
std::optional<bool> ray_parity(const MeshIndex& m, const Vec3& p, const Vec3& dir) {
  const Vec3 inv{1.0 / dir.x, 1.0 / dir.y, 1.0 / dir.z};
  const auto& nodes = m.bvh().nodes();
  const auto& order = m.bvh().order();
  bool inside = false;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const auto& node = nodes[stack.back()];
    stack.pop_back();
    if (!ray_box(p, inv, node.box.inflated(1e-9))) continue;
    if (node.leaf()) {
      for (int k = node.first; k < node.first + node.count; ++k) {
        switch (ray_triangle(p, dir, m.mesh().triangle(order[k]))) {
          case RayHit::hit:
            inside = !inside;
            break;
          case RayHit::ambiguous:
            return std::nullopt;
          case RayHit::miss:
            break;
        }
      }
    } else {
      stack.push_back(node.left);
      stack.push_back(node.right);
    }
  }
  return inside;
}

bool pair_hits(const Triangle& ta, const Triangle& tb, double pen_tol) {
  const auto sb = shrink_triangle(tb, pen_tol);
  if (sb && triangles_intersect(ta, *sb)) return true;
  const auto sa = shrink_triangle(ta, pen_tol);
  return sa && triangles_intersect(*sa, tb);
}

std::optional<Vec3> find_containment(const MeshIndex& inner, const MeshIndex& outer, double pen_tol) {
  if (inner.mesh().empty() || outer.mesh().empty()) return std::nullopt;
  if (!outer.box().inflated(pen_tol).contains(inner.box())) return std::nullopt;
  if (!is_watertight(outer.mesh()))
    throw GeometryError("mesh_overlap: containment test needs a watertight mesh");
  auto decide = [&](const Vec3& q) -> std::optional<bool> {
    if (within_distance(outer, q, pen_tol)) return std::nullopt;
    return point_in_mesh(outer, q);
  };
  for (const Vec3& v : inner.mesh().vertices) {
    if (auto r = decide(v)) return *r ? std::optional<Vec3>(v) : std::nullopt;
  }
  for (std::size_t i = 0; i < inner.mesh().triangles.size(); ++i) {
    const Triangle t = inner.mesh().triangle(i);
    const Vec3 c = (t.a + t.b + t.c) * (1.0 / 3.0);
    if (auto r = decide(c)) return *r ? std::optional<Vec3>(c) : std::nullopt;
  }
  return std::nullopt;  // every sample touches the other surface
}

}  // namespace

bool triangles_intersect(const Triangle& a, const Triangle& b) {
  const Vec3 na_raw = cross(a.b - a.a, a.c - a.a);
  const Vec3 nb_raw = cross(b.b - b.a, b.c - b.a);
  const double la = norm(na_raw);
  const double lb = norm(nb_raw);
  if (la < 1e-18 || lb < 1e-18) return false;
  const Vec3 na = na_raw * (1.0 / la);
  const Vec3 nb = nb_raw * (1.0 / lb);

  const auto da = plane_distances(a, nb, b.a);  // a's vertices against b's plane
  if (same_side(da)) return false;
  if (da[0] == 0.0 && da[1] == 0.0 && da[2] == 0.0) return false;  // coplanar
  const auto db = plane_distances(b, na, a.a);
  if (same_side(db)) return false;
  if (db[0] == 0.0 && db[1] == 0.0 && db[2] == 0.0) return false;

  const Vec3 line = cross(na, nb);
  int axis = 0;
  if (std::abs(line.y) > std::abs(line[axis])) axis = 1;
  if (std::abs(line.z) > std::abs(line[axis])) axis = 2;
  const std::array<double, 3> pa{a.a[axis], a.b[axis], a.c[axis]};
  const std::array<double, 3> pb{b.a[axis], b.b[axis], b.c[axis]};
  const Interval ia = crossing_interval(pa, da);
  const Interval ib = crossing_interval(pb, db);
  if (!ia.valid() || !ib.valid()) return false;
  return std::max(ia.lo, ib.lo) <= std::min(ia.hi, ib.hi);
}

std::optional<Triangle> shrink_triangle(const Triangle& t, double d) {
  if (d <= 0.0) return t;
  const double la = norm(t.c - t.b);  // opposite a
  const double lb = norm(t.a - t.c);
  const double lc = norm(t.b - t.a);
  const double perimeter = la + lb + lc;
  if (perimeter <= 0.0) return std::nullopt;
  const double inradius = 2.0 * triangle_area(t) / perimeter;
  if (inradius <= d) return std::nullopt;
  const Vec3 incenter = (t.a * la + t.b * lb + t.c * lc) * (1.0 / perimeter);
  const double s = 1.0 - d / inradius;
  return Triangle{incenter + (t.a - incenter) * s, incenter + (t.b - incenter) * s,
                  incenter + (t.c - incenter) * s};
}

MeshIndex::MeshIndex(TriMesh mesh) : mesh_(std::move(mesh)), bvh_(mesh_), box_(mesh_aabb(mesh_)) {}

OverlapResult mesh_overlap(const MeshIndex& a, const MeshIndex& b, double pen_tol) {
  OverlapResult result;
  if (a.mesh().empty() || b.mesh().empty()) return result;
  if (!a.box().overlaps(b.box())) return result;

  const auto& na = a.bvh().nodes();
  const auto& nb = b.bvh().nodes();
  std::vector<std::pair<int, int>> stack{{0, 0}};
  while (!stack.empty()) {
    const auto [ia, ib] = stack.back();
    stack.pop_back();
    const auto& x = na[ia];
    const auto& y = nb[ib];
    if (!x.box.overlaps(y.box)) continue;
    if (x.leaf() && y.leaf()) {
      for (int p = x.first; p < x.first + x.count; ++p) {
        const int ta = a.bvh().order()[p];
        for (int q = y.first; q < y.first + y.count; ++q) {
          const int tb = b.bvh().order()[q];
          if (!a.bvh().triangle_box(ta).overlaps(b.bvh().triangle_box(tb))) continue;
          if (pair_hits(a.mesh().triangle(ta), b.mesh().triangle(tb), pen_tol)) {
            result.overlaps = true;
            result.triangle_pair = std::make_pair(ta, tb);
            return result;
          }
        }
      }
    } else if (!x.leaf() && (y.leaf() || x.box.volume() >= y.box.volume())) {
      stack.push_back({x.left, ib});
      stack.push_back({x.right, ib});
    } else {
      stack.push_back({ia, y.left});
      stack.push_back({ia, y.right});
    }
  }

  if (auto p = find_containment(a, b, pen_tol)) {
    result.overlaps = true;
    result.containment_point = p;
  } else if (auto q = find_containment(b, a, pen_tol)) {
    result.overlaps = true;
    result.containment_point = q;
  }
  return result;
}

OverlapResult mesh_overlap(const TriMesh& a, const TriMesh& b, double pen_tol) {
  return mesh_overlap(MeshIndex(a), MeshIndex(b), pen_tol);
}

bool point_in_mesh(const MeshIndex& m, const Vec3& p) {
  if (m.mesh().empty() || !m.box().inflated(1e-12).contains(Aabb{p, p})) return false;
  static const std::array<Vec3, 5> kDirections{
      normalized(Vec3{0.5377, 0.4187, 0.7321}), normalized(Vec3{-0.3163, 0.8219, 0.4733}),
      normalized(Vec3{0.7071, -0.6029, 0.3697}), normalized(Vec3{-0.1931, -0.4457, -0.8742}),
      normalized(Vec3{0.9123, 0.2711, -0.3069})};
  // The first ray that misses every edge and vertex decides.
  for (const Vec3& dir : kDirections) {
    if (auto r = ray_parity(m, p, dir)) return *r;
  }
  throw GeometryError("point_in_mesh: every probe ray grazed an edge");
}

Vec3 closest_point_on_triangle(const Vec3& p, const Triangle& t) {
  // Ericson, Real-Time Collision Detection, 5.1.5.
  const Vec3 ab = t.b - t.a;
  const Vec3 ac = t.c - t.a;
  const Vec3 ap = p - t.a;
  const double d1 = dot(ab, ap);
  const double d2 = dot(ac, ap);
  if (d1 <= 0 && d2 <= 0) return t.a;
  const Vec3 bp = p - t.b;
  const double d3 = dot(ab, bp);
  const double d4 = dot(ac, bp);
  if (d3 >= 0 && d4 <= d3) return t.b;
  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0 && d1 >= 0 && d3 <= 0) return t.a + ab * (d1 / (d1 - d3));
  const Vec3 cp = p - t.c;
  const double d5 = dot(ab, cp);
  const double d6 = dot(ac, cp);
  if (d6 >= 0 && d5 <= d6) return t.c;
  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0 && d2 >= 0 && d6 <= 0) return t.a + ac * (d2 / (d2 - d6));
  const double va = d3 * d6 - d5 * d4;
  if (va <= 0 && (d4 - d3) >= 0 && (d5 - d6) >= 0)
    return t.b + (t.c - t.b) * ((d4 - d3) / ((d4 - d3) + (d5 - d6)));
  const double denom = 1.0 / (va + vb + vc);
  return t.a + ab * (vb * denom) + ac * (vc * denom);
}

bool within_distance(const MeshIndex& m, const Vec3& p, double dist) {
  if (m.mesh().empty()) return false;
  const Aabb probe = Aabb{p, p}.inflated(dist);
  const auto& nodes = m.bvh().nodes();
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const auto& node = nodes[stack.back()];
    stack.pop_back();
    if (!node.box.overlaps(probe)) continue;
    if (node.leaf()) {
      for (int k = node.first; k < node.first + node.count; ++k) {
        const Triangle t = m.mesh().triangle(m.bvh().order()[k]);
        if (norm(closest_point_on_triangle(p, t) - p) <= dist) return true;
      }
    } else {
      stack.push_back(node.left);
      stack.push_back(node.right);
    }
  }
  return false;
}

}  // namespace bendforge
