// Copyright 2026 The Planecode Authors.
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

#include "fixtures.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace planecode::testing {

namespace {

using Quad = std::array<int, 4>;

TriangleMesh from_quads(std::vector<Vec3> verts, const std::vector<Quad>& quads) {
  std::vector<Triangle> tris;
  for (const Quad& q : quads) {
    tris.push_back({q[0], q[1], q[2]});
    tris.push_back({q[0], q[2], q[3]});
  }
  return TriangleMesh(std::move(verts), std::move(tris));
}

double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) { return a.x() * b.y() - a.y() * b.x(); }

bool inside_triangle(const Eigen::Vector2d& p, const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                     const Eigen::Vector2d& c) {
  return cross2(b - a, p - a) >= 0 && cross2(c - b, p - b) >= 0 && cross2(a - c, p - c) >= 0;
}

// Ear clipping for a simple counter-clockwise polygon.
std::vector<Triangle> ear_clip(const std::vector<Eigen::Vector2d>& poly) {
  std::vector<int> idx(poly.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::vector<Triangle> out;
  while (idx.size() > 3) {
    bool clipped = false;
    for (std::size_t i = 0; i < idx.size() && !clipped; ++i) {
      const int a = idx[(i + idx.size() - 1) % idx.size()];
      const int b = idx[i];
      const int c = idx[(i + 1) % idx.size()];
      const auto &pa = poly[static_cast<std::size_t>(a)], &pb = poly[static_cast<std::size_t>(b)],
                 &pc = poly[static_cast<std::size_t>(c)];
      if (cross2(pb - pa, pc - pb) <= 0) continue;
      bool empty = true;
      for (int v : idx) {
        if (v == a || v == b || v == c) continue;
        if (inside_triangle(poly[static_cast<std::size_t>(v)], pa, pb, pc)) {
          empty = false;
          break;
        }
      }
      if (!empty) continue;
      out.push_back({a, b, c});
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(i));
      clipped = true;
    }
    if (!clipped) break;
  }
  if (idx.size() == 3) out.push_back({idx[0], idx[1], idx[2]});
  return out;
}

}  // namespace

TriangleMesh box(const Vec3& lo, const Vec3& hi) {
  std::vector<Vec3> v;
  for (int i = 0; i < 8; ++i) {
    v.emplace_back(i & 1 ? hi.x() : lo.x(), i & 2 ? hi.y() : lo.y(), i & 4 ? hi.z() : lo.z());
  }
  // Corner i has bits (x, y, z); faces listed counter-clockwise from outside.
  return from_quads(std::move(v),
                    {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}});
}

TriangleMesh unit_cube() { return box(Vec3(0, 0, 0), Vec3(1, 1, 1)); }

TriangleMesh tetrahedron() {
  return TriangleMesh({Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)},
                      {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}});
}

TriangleMesh notched_staircase() {
  std::vector<Vec3> v;
  const double xy[4][2] = {{0, 0}, {4, 0}, {4, 4}, {0, 4}};
  const double in[4][2] = {{1, 1}, {3, 1}, {3, 3}, {1, 3}};
  for (const auto& p : xy) v.emplace_back(p[0], p[1], 0);  // 0-3 bottom
  for (const auto& p : xy) v.emplace_back(p[0], p[1], 2);  // 4-7 top of the walls
  for (const auto& p : in) v.emplace_back(p[0], p[1], 3);  // 8-11 rim
  for (const auto& p : in) v.emplace_back(p[0], p[1], 1);  // 12-15 pocket floor
  std::vector<Quad> q{{0, 3, 2, 1}};
  for (int i = 0; i < 4; ++i) q.push_back({i, (i + 1) % 4, 4 + (i + 1) % 4, 4 + i});
  for (int i = 0; i < 4; ++i) q.push_back({4 + i, 4 + (i + 1) % 4, 8 + (i + 1) % 4, 8 + i});
  for (int i = 0; i < 4; ++i) q.push_back({8 + i, 8 + (i + 1) % 4, 12 + (i + 1) % 4, 12 + i});
  q.push_back({12, 13, 14, 15});
  return from_quads(std::move(v), q);
}

TriangleMesh prism(const std::vector<Eigen::Vector2d>& outline, double h) {
  const int n = static_cast<int>(outline.size());
  std::vector<Vec3> v;
  for (const auto& p : outline) v.emplace_back(p.x(), p.y(), 0);
  for (const auto& p : outline) v.emplace_back(p.x(), p.y(), h);
  std::vector<Triangle> tris;
  for (const Triangle& t : ear_clip(outline)) {
    tris.push_back({t[0], t[2], t[1]});
    tris.push_back({t[0] + n, t[1] + n, t[2] + n});
  }
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    tris.push_back({i, j, j + n});
    tris.push_back({i, j + n, i + n});
  }
  return TriangleMesh(std::move(v), std::move(tris));
}

TriangleMesh l_prism() { return prism({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}, 1.0); }

TriangleMesh two_notch_solid() {
  return prism(
      {{0, 0}, {5, 0}, {5, 2}, {4, 2}, {4, 1}, {3, 1}, {3, 2}, {2, 2}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}, 1.5);
}

TriangleMesh regular_prism(int sides, double radius, double h) {
  std::vector<Eigen::Vector2d> outline;
  for (int i = 0; i < sides; ++i) {
    const double a = 2 * std::numbers::pi * i / sides;
    outline.emplace_back(radius * std::cos(a), radius * std::sin(a));
  }
  return prism(outline, h);
}

TriangleMesh open_box() {
  const TriangleMesh cube = unit_cube();
  std::vector<Triangle> tris;
  for (const Triangle& t : cube.triangles()) {
    const bool top = cube.vertex(t[0]).z() == 1 && cube.vertex(t[1]).z() == 1 && cube.vertex(t[2]).z() == 1;
    if (!top) tris.push_back(t);
  }
  return TriangleMesh(cube.vertices(), std::move(tris));
}

PlaneSet chamfered_cube_planes(double cut) {
  PlaneSet s;
  for (int axis = 0; axis < 3; ++axis) {
    Vec3 e = Vec3::Zero();
    e[axis] = 1;
    s.planes.push_back(OrientedPlaned::from_normal(e, 1.0));
    s.planes.push_back(OrientedPlaned::from_normal(-e, 0.0));
  }
  const Vec3 n = Vec3(1, 1, 1).normalized();
  s.planes.push_back(OrientedPlaned::from_normal(n, (3.0 - cut) / std::sqrt(3.0)));
  return s;
}

TriangleMesh random_hull(std::mt19937_64& rng, int count) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> axis(0.5, 2.0), shift(-3.0, 3.0);
  const Vec3 scale(axis(rng), axis(rng), axis(rng));
  const Vec3 center(shift(rng), shift(rng), shift(rng));
  std::vector<Vec3> pts;
  for (int i = 0; i < count; ++i) {
    const Vec3 g(gauss(rng), gauss(rng), gauss(rng));
    pts.push_back(center + g.normalized().cwiseProduct(scale));
  }
  const std::size_t n = pts.size();
  std::vector<Triangle> facets;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec3 normal = (pts[j] - pts[i]).cross(pts[k] - pts[i]);
        if (normal.norm() < 1e-12) continue;
        int below = 0, above = 0;
        for (std::size_t m = 0; m < n; ++m) {
          if (m == i || m == j || m == k) continue;
          const double d = normal.dot(pts[m] - pts[i]);
          below += d < 0;
          above += d > 0;
        }
        const int others = static_cast<int>(n) - 3;
        if (below == others) facets.push_back({int(i), int(j), int(k)});
        if (above == others) facets.push_back({int(i), int(k), int(j)});
      }
    }
  }
  std::map<int, int> remap;
  std::vector<Vec3> verts;
  for (Triangle& t : facets) {
    for (int& c : t) {
      auto [it, fresh] = remap.try_emplace(c, static_cast<int>(verts.size()));
      if (fresh) verts.push_back(pts[static_cast<std::size_t>(c)]);
      c = it->second;
    }
  }
  return TriangleMesh(std::move(verts), std::move(facets));
}

std::vector<NamedMesh> segmentation_corpus() {
  std::vector<NamedMesh> out{
      {"cube", unit_cube()},
      {"tetrahedron", tetrahedron()},
      {"staircase", notched_staircase()},
      {"l_prism", l_prism()},
      {"two_notch", two_notch_solid()},
      {"slab", box(Vec3(-2, -1, 0), Vec3(3, 1, 0.25))},
      {"octagon_prism", regular_prism(8, 1.0, 2.0)},
  };
  std::mt19937_64 rng(20260417);
  for (int i = 0; i < 4; ++i) {
    out.push_back({"hull_" + std::to_string(i), random_hull(rng, 8 + 6 * i)});
  }
  return out;
}

}  // namespace planecode::testing
