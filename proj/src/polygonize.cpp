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

#include "planecode/polygonize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include <Eigen/Geometry>

#include "surface_patch.hpp"

namespace planecode {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<PolygonFace> polygonize_with(const TriangleMesh& mesh, const detail::TrianglePlanes& tp,
                                         const MeshPart& part, double eps) {
  std::vector<PolygonFace> faces;
  for (auto& cls : detail::coplanar_classes(mesh, tp, part.triangles, eps)) {
    auto ring = detail::boundary_ring(mesh, cls);
    if (!ring) {
      throw Error(Errc::NonSimpleBoundary,
                  "coplanar patch at triangle " + std::to_string(cls.front()) + " has a hole or pinch");
    }
    faces.push_back({tp.planes[static_cast<std::size_t>(detail::largest_triangle(tp, cls))], std::move(*ring),
                     std::move(cls)});
  }
  return faces;
}

void add_unique(PlaneSet& set, const OrientedPlaned& p, double h_tol) {
  for (const OrientedPlaned& q : set) {
    if (same_plane(p, q, 1e-9, h_tol)) return;
  }
  set.planes.push_back(p);
}

PlaneSet boundary_planes_with(const TriangleMesh& mesh, const MeshPart& part,
                              const std::vector<PolygonFace>& polys, double eps) {
  const double sign = part.kind == PartKind::PseudoConvex ? 1.0 : -1.0;
  const std::unordered_set<int> members(part.triangles.begin(), part.triangles.end());
  std::map<std::pair<int, int>, bool> open;  // directed edge -> lies on the part's rim
  std::vector<int> verts;
  for (int t : part.triangles) {
    const Triangle& tri = mesh.triangle(t);
    for (int k = 0; k < 3; ++k) {
      const int s = mesh.neighbor(t, k);
      open[{tri[static_cast<std::size_t>(k)], tri[static_cast<std::size_t>((k + 1) % 3)]}] =
          s < 0 || !members.count(s);
      verts.push_back(tri[static_cast<std::size_t>(k)]);
    }
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  PlaneSet out;
  for (const PolygonFace& poly : polys) {
    const std::vector<int>& ring = poly.boundary;
    const std::size_t n = ring.size();
    const Vec3 normal = poly.plane.normal();
    std::vector<char> rim(n);
    std::vector<Vec3> dir(n);
    for (std::size_t i = 0; i < n; ++i) {
      rim[i] = open.at({ring[i], ring[(i + 1) % n]});
      dir[i] = (mesh.vertex(ring[(i + 1) % n]) - mesh.vertex(ring[i])).normalized();
    }
    auto continues = [&](std::size_t i) {  // edge i extends edge i-1 in a straight line
      const std::size_t prev = (i + n - 1) % n;
      return rim[prev] && rim[i] && dir[prev].cross(dir[i]).norm() <= 1e-9 && dir[prev].dot(dir[i]) > 0;
    };
    for (std::size_t start = 0; start < n; ++start) {
      if (!rim[start] || continues(start)) continue;
      std::size_t last = start;
      while (continues((last + 1) % n) && (last + 1) % n != start) last = (last + 1) % n;

      const Vec3& a = mesh.vertex(ring[start]);
      const Vec3& b = mesh.vertex(ring[(last + 1) % n]);
      const Vec3 d = (b - a).normalized();
      const Vec3 inward_normal = sign * normal;  // face normal in the decoding frame
      const Vec3 outward = d.cross(normal);      // in-plane, away from the polygon

      // Rotating the face normal toward `outward` about the run sweeps the
      // pencil of planes through it; find how far it can turn before some
      // part vertex ends up on the positive side.
      double reach = kPi;
      for (int v : verts) {
        const Vec3 q = mesh.vertex(v) - a;
        double x = q.dot(inward_normal);
        const double y = q.dot(outward);
        if (std::hypot(x, y) <= eps) continue;
        if (x > 0.0 && x <= eps) x = 0.0;
        const double psi = std::atan2(y, x);
        if (std::abs(psi) < kPi / 2) {
          throw Error(Errc::BoundaryNotCuttable,
                      "vertex " + std::to_string(v) + " lies in front of a part face");
        }
        reach = std::min(reach, psi >= kPi / 2 ? psi - kPi / 2 : psi + 1.5 * kPi);
      }
      if (reach <= 1e-9) {
        throw Error(Errc::BoundaryNotCuttable, "no plane through the rim run at vertex " +
                                                   std::to_string(ring[start]) +
                                                   " keeps the part on one side");
      }
      const double alpha = 0.75 * reach;
      const Vec3 m = std::cos(alpha) * inward_normal + std::sin(alpha) * outward;
      const OrientedPlaned cut = OrientedPlaned::from_normal(sign * m, sign * m.dot(a));
      add_unique(out, cut, eps);
    }
  }
  return canonical_order(std::move(out));
}

PartCode encode_part(const TriangleMesh& mesh, const MeshPart& part, const std::vector<PolygonFace>& polys,
                     double eps) {
  PartCode code;
  code.kind = part.kind;
  for (const PolygonFace& poly : polys) add_unique(code.face_planes, poly.plane, eps);
  code.face_planes = canonical_order(std::move(code.face_planes));
  code.boundary_planes = boundary_planes_with(mesh, part, polys, eps);
  return code;
}

double ring_area(const TriangleMesh& mesh, const std::vector<int>& ring) {
  Vec3 sum = Vec3::Zero();
  for (std::size_t i = 0; i < ring.size(); ++i) {
    sum += mesh.vertex(ring[i]).cross(mesh.vertex(ring[(i + 1) % ring.size()]));
  }
  return 0.5 * sum.norm();
}

// The part decodes to exactly its polygons: every polygon plane carries a
// face of the same area.
bool decodes_to_polygons(const TriangleMesh& mesh, const PartCode& code,
                         const std::vector<PolygonFace>& polys) {
  ConvexPolyhedron poly;
  try {
    poly = decode_convex(decoding_planes(code));
  } catch (const Error&) {
    return false;
  }
  std::vector<double> expected(code.face_planes.size(), 0.0);
  for (const PolygonFace& f : polys) {
    for (std::size_t i = 0; i < code.face_planes.size(); ++i) {
      if (same_plane(f.plane, code.face_planes[i], 1e-9, 1e-6)) {
        expected[i] += ring_area(mesh, f.boundary);
        break;
      }
    }
  }
  for (std::size_t i = 0; i < code.face_planes.size(); ++i) {
    const int face = poly.plane_face[i];
    if (face < 0) return false;
    const double got = face_area(poly, static_cast<std::size_t>(face));
    if (std::abs(got - expected[i]) > 1e-6 * std::max(1.0, expected[i])) return false;
  }
  return true;
}

struct Welder {
  explicit Welder(double tol) : tol(tol) {}

  // Merges points within tol; returns the representative index per input.
  std::vector<int> weld(const std::vector<Vec3>& pts, std::vector<Vec3>& out) const {
    std::vector<int> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return pts[static_cast<std::size_t>(a)].x() < pts[static_cast<std::size_t>(b)].x();
    });
    std::vector<int> rep(pts.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto oi = static_cast<std::size_t>(order[i]);
      if (rep[oi] >= 0) continue;
      rep[oi] = static_cast<int>(oi);
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        const auto oj = static_cast<std::size_t>(order[j]);
        if (pts[oj].x() - pts[oi].x() > tol) break;
        if (rep[oj] < 0 && (pts[oj] - pts[oi]).norm() <= tol) rep[oj] = static_cast<int>(oi);
      }
    }
    // Compact in first-appearance order so output is independent of the sort.
    std::vector<int> slot(pts.size(), -1);
    std::vector<int> index(pts.size());
    out.clear();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto r = static_cast<std::size_t>(rep[i]);
      if (slot[r] < 0) {
        slot[r] = static_cast<int>(out.size());
        out.push_back(pts[r]);
      }
      index[i] = slot[r];
    }
    return index;
  }

  double tol;
};

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
  const Vec3 ab = b - a;
  const double len2 = ab.squaredNorm();
  const double t = len2 > 0.0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
  return (p - (a + t * ab)).norm();
}

}  // namespace

std::size_t plane_count(const SegmentedCode& code) {
  std::size_t n = 0;
  for (const PartCode& p : code.parts) n += p.face_planes.size() + p.boundary_planes.size();
  return n;
}

std::vector<PolygonFace> polygonize_part(const TriangleMesh& mesh, const MeshPart& part, double eps) {
  return polygonize_with(mesh, detail::TrianglePlanes(mesh), part, eps);
}

PlaneSet boundary_planes_for_part(const TriangleMesh& mesh, const MeshPart& part, double eps) {
  const detail::TrianglePlanes tp(mesh);
  return boundary_planes_with(mesh, part, polygonize_with(mesh, tp, part, eps), eps);
}

PlaneSet decoding_planes(const PartCode& part) {
  PlaneSet all;
  all.planes.reserve(part.face_planes.size() + part.boundary_planes.size());
  for (const OrientedPlaned& p : part.face_planes) all.planes.push_back(p);
  for (const OrientedPlaned& p : part.boundary_planes) all.planes.push_back(p);
  if (part.kind == PartKind::PseudoConcave) {
    for (OrientedPlaned& p : all.planes) p = p.flipped();
  }
  return all;
}

SegmentedCode encode_segmented(const TriangleMesh& mesh) {
  return encode_segmented(mesh, default_tolerance(mesh));
}

SegmentedCode encode_segmented(const TriangleMesh& mesh, double eps) {
  const detail::TrianglePlanes tp(mesh);
  SegmentedCode code;
  for (const MeshPart& part : segment_mesh(mesh, eps)) {
    const auto polys = polygonize_with(mesh, tp, part, eps);
    PartCode pc;
    bool ok = true;
    try {
      pc = encode_part(mesh, part, polys, eps);
      ok = decodes_to_polygons(mesh, pc, polys);
    } catch (const Error& e) {
      if (e.code() != Errc::BoundaryNotCuttable) throw;
      ok = false;
    }
    if (ok) {
      code.parts.push_back(std::move(pc));
      continue;
    }
    // Fall back to one part per polygon; a lone convex polygon always closes.
    for (const PolygonFace& poly : polys) {
      const MeshPart piece{part.kind, poly.triangles};
      const std::vector<PolygonFace> single{poly};
      PartCode sub = encode_part(mesh, piece, single, eps);
      if (!decodes_to_polygons(mesh, sub, single)) {
        throw Error(Errc::BoundaryNotCuttable, "polygon at triangle " +
                                                   std::to_string(poly.triangles.front()) +
                                                   " cannot be closed by cutting planes");
      }
      code.parts.push_back(std::move(sub));
    }
  }
  return code;
}

TriangleMesh decode_segmented(const SegmentedCode& code) { return decode_segmented(code, -1.0); }

TriangleMesh decode_segmented(const SegmentedCode& code, double eps) {
  std::vector<Vec3> points;
  std::vector<std::vector<Triangle>> part_tris;
  for (std::size_t k = 0; k < code.parts.size(); ++k) {
    const PartCode& part = code.parts[k];
    const PlaneSet planes = decoding_planes(part);
    ConvexPolyhedron poly;
    try {
      poly = decode_convex(planes, eps > 0.0 ? eps : default_decode_tolerance(planes));
    } catch (const Error& e) {
      throw Error(Errc::PartUndecodable, "part " + std::to_string(k) + ": " + e.what());
    }
    const int base = static_cast<int>(points.size());
    points.insert(points.end(), poly.vertices.begin(), poly.vertices.end());
    std::vector<Triangle> tris;
    for (std::size_t i = 0; i < part.face_planes.size(); ++i) {
      const int face = poly.plane_face[i];
      if (face < 0) {
        throw Error(Errc::PartUndecodable,
                    "part " + std::to_string(k) + ": face plane " + std::to_string(i) + " bounds no face");
      }
      std::vector<int> ring = poly.faces[static_cast<std::size_t>(face)];
      if (part.kind == PartKind::PseudoConcave) std::reverse(ring.begin(), ring.end());
      for (std::size_t j = 1; j + 1 < ring.size(); ++j) {
        tris.push_back({base + ring[0], base + ring[j], base + ring[j + 1]});
      }
    }
    part_tris.push_back(std::move(tris));
  }

  Eigen::AlignedBox3d box;
  for (const Vec3& p : points) box.extend(p);
  const double tol = points.empty() ? 0.0 : 1e-6 * box.diagonal().norm();
  std::vector<Vec3> welded;
  const std::vector<int> index = Welder(tol).weld(points, welded);

  std::vector<Triangle> all;
  std::vector<std::vector<Triangle>> welded_parts;
  for (const auto& tris : part_tris) {
    std::vector<Triangle> wt;
    for (const Triangle& t : tris) {
      const Triangle w{index[static_cast<std::size_t>(t[0])], index[static_cast<std::size_t>(t[1])],
                       index[static_cast<std::size_t>(t[2])]};
      if (w[0] == w[1] || w[1] == w[2] || w[0] == w[2]) continue;
      wt.push_back(w);
      all.push_back(w);
    }
    welded_parts.push_back(std::move(wt));
  }

  if (welded_parts.size() > 1) {
    // Every rim vertex of a part must land on another part's rim.
    std::vector<std::vector<std::pair<int, int>>> rims(welded_parts.size());
    std::vector<std::set<int>> rim_verts(welded_parts.size());
    for (std::size_t k = 0; k < welded_parts.size(); ++k) {
      std::map<std::pair<int, int>, int> uses;
      for (const Triangle& t : welded_parts[k]) {
        for (int e = 0; e < 3; ++e) {
          const int a = t[static_cast<std::size_t>(e)];
          const int b = t[static_cast<std::size_t>((e + 1) % 3)];
          ++uses[{std::min(a, b), std::max(a, b)}];
        }
      }
      for (const auto& [edge, count] : uses) {
        if (count != 1) continue;
        rims[k].push_back(edge);
        rim_verts[k].insert(edge.first);
        rim_verts[k].insert(edge.second);
      }
    }
    for (std::size_t k = 0; k < welded_parts.size(); ++k) {
      for (int v : rim_verts[k]) {
        bool matched = false;
        for (std::size_t o = 0; o < welded_parts.size() && !matched; ++o) {
          if (o == k) continue;
          if (rim_verts[o].count(v)) {
            matched = true;
            break;
          }
          for (const auto& [a, b] : rims[o]) {
            if (point_segment_distance(welded[static_cast<std::size_t>(v)],
                                       welded[static_cast<std::size_t>(a)],
                                       welded[static_cast<std::size_t>(b)]) <= tol) {
              matched = true;
              break;
            }
          }
        }
        if (!matched) {
          throw Error(Errc::WeldMismatch,
                      "rim vertex of part " + std::to_string(k) + " matches no other part");
        }
      }
    }
  }
  return TriangleMesh(std::move(welded), std::move(all));
}

}  // namespace planecode
