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

#include "bendforge/geom/polygon.hpp"

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>

namespace bendforge {

namespace bg = boost::geometry;
using BgPoint = bg::model::d2::point_xy<double>;
using BgPolygon = bg::model::polygon<BgPoint, /*clockwise=*/false, /*closed=*/false>;
using BgMulti = bg::model::multi_polygon<BgPolygon>;

namespace {

constexpr double kMinArea = 1e-9;

BgPolygon to_bg(const Polygon2& p) {
  BgPolygon out;
  for (const Vec2& v : p.vertices) out.outer().emplace_back(v.x, v.y);
  bg::correct(out);
  return out;
}

Polygon2 from_ring(const BgPolygon::ring_type& ring) {
  Polygon2 p;
  p.vertices.reserve(ring.size());
  for (const BgPoint& q : ring) p.vertices.push_back({q.x(), q.y()});
  return p;
}

double orient(const Vec2& a, const Vec2& b, const Vec2& c) { return cross(b - a, c - a); }

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_touch(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  const double d1 = orient(c, d, a);
  const double d2 = orient(c, d, b);
  const double d3 = orient(a, b, c);
  const double d4 = orient(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment(c, d, a)) return true;
  if (d2 == 0 && on_segment(c, d, b)) return true;
  if (d3 == 0 && on_segment(a, b, c)) return true;
  if (d4 == 0 && on_segment(a, b, d)) return true;
  return false;
}

void require_nondegenerate(const Polygon2& p, const char* which) {
  if (p.size() < 3 || area(p) < kMinArea)
    throw GeometryError(std::string("polygon_boolean: degenerate input polygon ") + which);
}

}  // namespace

double signed_area(const Polygon2& p) {
  const std::size_t n = p.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += cross(p[i], p[(i + 1) % n]);
  return 0.5 * s;
}

Vec2 centroid(const Polygon2& p) {
  const std::size_t n = p.size();
  double a = 0.0, cx = 0.0, cy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p0 = p[i];
    const Vec2& p1 = p[(i + 1) % n];
    const double c = cross(p0, p1);
    a += c;
    cx += (p0.x + p1.x) * c;
    cy += (p0.y + p1.y) * c;
  }
  a *= 0.5;
  return {cx / (6.0 * a), cy / (6.0 * a)};
}

bool is_simple(const Polygon2& p) {
  const std::size_t n = p.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = p[i];
    const Vec2& b = p[(i + 1) % n];
    if (a == b) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_touch(a, b, p[j], p[(j + 1) % n])) return false;
    }
  }
  return true;
}

Polygon2 cleaned(const Polygon2& p, double tol) {
  std::vector<Vec2> v;
  v.reserve(p.size());
  for (const Vec2& q : p.vertices) {
    if (v.empty() || norm(q - v.back()) > tol) v.push_back(q);
  }
  while (v.size() > 1 && norm(v.front() - v.back()) <= tol) v.pop_back();
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Vec2& a = v[(i + v.size() - 1) % v.size()];
      const Vec2& b = v[i];
      const Vec2& c = v[(i + 1) % v.size()];
      const double len = norm(c - a);
      if (len <= tol || std::abs(orient(a, b, c)) <= tol * len) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  Polygon2 out{std::move(v)};
  if (out.size() >= 3 && signed_area(out) < 0) std::reverse(out.vertices.begin(), out.vertices.end());
  return out;
}

Polygon2 rectangle(double x0, double y0, double x1, double y1) {
  return Polygon2{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

bool contains_point(const Polygon2& p, const Vec2& q) {
  bool inside = false;
  const std::size_t n = p.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = p[i];
    const Vec2& b = p[j];
    if ((a.y > q.y) != (b.y > q.y)) {
      const double x = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (q.x < x) inside = !inside;
    }
  }
  return inside;
}

std::vector<Polygon2> polygon_boolean(const Polygon2& a, const Polygon2& b, BooleanOp op) {
  require_nondegenerate(a, "a");
  require_nondegenerate(b, "b");
  BgMulti result;
  if (op == BooleanOp::intersection) {
    bg::intersection(to_bg(a), to_bg(b), result);
  } else {
    bg::difference(to_bg(a), to_bg(b), result);
  }
  std::vector<Polygon2> out;
  for (const BgPolygon& poly : result) {
    if (!poly.inners().empty())
      throw GeometryError("polygon_boolean: result polygon has a hole");
    Polygon2 q = cleaned(from_ring(poly.outer()));
    if (q.size() >= 3 && area(q) > kMinArea) out.push_back(std::move(q));
  }
  return out;
}

double intersection_area(const Polygon2& a, const Polygon2& b) {
  if (a.size() < 3 || b.size() < 3) return 0.0;
  BgMulti result;
  bg::intersection(to_bg(a), to_bg(b), result);
  return bg::area(result);
}

std::vector<std::array<int, 3>> triangulate(const Polygon2& p) {
  const int n = static_cast<int>(p.size());
  std::vector<std::array<int, 3>> tris;
  if (n < 3) return tris;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  if (signed_area(p) < 0) std::reverse(idx.begin(), idx.end());

  auto is_ear = [&](int i) {
    const int m = static_cast<int>(idx.size());
    const Vec2& a = p[idx[(i + m - 1) % m]];
    const Vec2& b = p[idx[i]];
    const Vec2& c = p[idx[(i + 1) % m]];
    if (orient(a, b, c) <= 0) return false;
    for (int k = 0; k < m; ++k) {
      if (k == i || k == (i + 1) % m || k == (i + m - 1) % m) continue;
      const Vec2& q = p[idx[k]];
      if (q == a || q == b || q == c) continue;
      if (orient(a, b, q) >= 0 && orient(b, c, q) >= 0 && orient(c, a, q) >= 0) return false;
    }
    return true;
  };

  int guard = 0;
  while (idx.size() > 3) {
    const int m = static_cast<int>(idx.size());
    int ear = -1;
    for (int i = 0; i < m; ++i) {
      if (is_ear(i)) {
        ear = i;
        break;
      }
    }
    if (ear < 0) {
      // Numerically stuck (nearly collinear run); clip the least-bad convex vertex.
      double best = -std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        const double o = orient(p[idx[(i + m - 1) % m]], p[idx[i]], p[idx[(i + 1) % m]]);
        if (o > best) {
          best = o;
          ear = i;
        }
      }
    }
    tris.push_back({idx[(ear + m - 1) % m], idx[ear], idx[(ear + 1) % m]});
    idx.erase(idx.begin() + ear);
    if (++guard > 4 * n) throw GeometryError("triangulate: failed to converge");
  }
  tris.push_back({idx[0], idx[1], idx[2]});
  return tris;
}

}  // namespace bendforge
