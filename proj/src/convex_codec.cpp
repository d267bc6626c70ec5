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

#include "planecode/convex_codec.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

namespace planecode {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
  }
  std::vector<int> parent;
};

long long grid_key(double angle) { return std::llround(angle * 1e9); }

// Orthonormal u, v with u x v = n.
std::pair<Vec3, Vec3> plane_basis(const Vec3& n) {
  const Vec3 helper = std::abs(n.x()) < 0.6 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 u = n.cross(helper).normalized();
  return {u, n.cross(u)};
}

}  // namespace

bool same_plane(const OrientedPlaned& a, const OrientedPlaned& b, double angle_tol, double h_tol) {
  return angle_between(a, b) <= angle_tol && std::abs(a.h - b.h) <= h_tol;
}

bool has_duplicate_planes(const PlaneSet& code, double angle_tol, double h_tol) {
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      if (same_plane(code[i], code[j], angle_tol, h_tol)) return true;
    }
  }
  return false;
}

PlaneSet canonical_order(PlaneSet code) {
  std::stable_sort(code.planes.begin(), code.planes.end(),
                   [](const OrientedPlaned& a, const OrientedPlaned& b) {
                     return std::make_tuple(grid_key(a.direction.nu), grid_key(a.direction.phi), a.h) <
                            std::make_tuple(grid_key(b.direction.nu), grid_key(b.direction.phi), b.h);
                   });
  return code;
}

double face_area(const ConvexPolyhedron& poly, std::size_t face) {
  const std::vector<int>& ring = poly.faces[face];
  Vec3 sum = Vec3::Zero();
  for (std::size_t i = 0; i < ring.size(); ++i) {
    sum += poly.vertices[static_cast<std::size_t>(ring[i])].cross(
        poly.vertices[static_cast<std::size_t>(ring[(i + 1) % ring.size()])]);
  }
  return 0.5 * sum.norm();
}

double volume(const ConvexPolyhedron& poly) { return enclosed_volume(to_triangle_mesh(poly)); }

TriangleMesh to_triangle_mesh(const ConvexPolyhedron& poly) {
  std::vector<Triangle> tris;
  for (const std::vector<int>& ring : poly.faces) {
    for (std::size_t i = 1; i + 1 < ring.size(); ++i) {
      tris.push_back({ring[0], ring[i], ring[i + 1]});
    }
  }
  return TriangleMesh(poly.vertices, std::move(tris));
}

Rotation Rotation::from_matrix(const Eigen::Matrix3d& m, double tol) {
  const double ortho = (m.transpose() * m - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
  const double det = m.determinant();
  if (!(ortho <= tol) || !(std::abs(det - 1.0) <= tol)) {
    throw Error(Errc::NotARotation,
                "|R^T R - I| = " + std::to_string(ortho) + ", det = " + std::to_string(det));
  }
  return Rotation(m);
}

Rotation Rotation::about_axis(const Vec3& axis, double angle) {
  return Rotation(Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix());
}

std::optional<ConvexityViolation> find_convexity_violation(const TriangleMesh& mesh, double eps) {
  std::vector<char> used(mesh.num_vertices(), 0);
  for (const Triangle& tri : mesh.triangles()) {
    for (int v : tri) used[static_cast<std::size_t>(v)] = 1;
  }
  for (int t = 0; t < static_cast<int>(mesh.num_triangles()); ++t) {
    const OrientedPlaned plane = triangle_plane(mesh, t);
    const Vec3 n = plane.normal();
    for (int v = 0; v < static_cast<int>(mesh.num_vertices()); ++v) {
      if (!used[static_cast<std::size_t>(v)]) continue;
      const double d = n.dot(mesh.vertex(v)) - plane.h;
      if (d > eps) return ConvexityViolation{v, t, d};
    }
  }
  return std::nullopt;
}

PlaneSet encode_convex(const TriangleMesh& mesh) { return encode_convex(mesh, default_tolerance(mesh)); }

PlaneSet encode_convex(const TriangleMesh& mesh, double eps) {
  if (mesh.empty()) throw Error(Errc::NotClosed, "mesh has no triangles");
  if (!mesh.closed()) throw Error(Errc::NotClosed, "mesh has boundary or non-manifold edges");

  const int n = static_cast<int>(mesh.num_triangles());
  std::vector<OrientedPlaned> planes;
  planes.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) planes.push_back(triangle_plane(mesh, t));

  if (auto bad = find_convexity_violation(mesh, eps)) {
    throw Error(Errc::NotConvex, "vertex " + std::to_string(bad->vertex) + " lies " +
                                     std::to_string(bad->distance) + " above triangle " +
                                     std::to_string(bad->triangle));
  }

  DisjointSets groups(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    const Vec3 nt = planes[static_cast<std::size_t>(t)].normal();
    for (int k = 0; k < 3; ++k) {
      const int s = mesh.neighbor(t, k);
      if (s < t) continue;
      const Triangle& other = mesh.triangle(s);
      bool coplanar = nt.dot(planes[static_cast<std::size_t>(s)].normal()) > 0.0;
      for (int v : other) {
        coplanar =
            coplanar && std::abs(planes[static_cast<std::size_t>(t)].signed_distance(mesh.vertex(v))) <= eps;
      }
      if (coplanar) groups.unite(t, s);
    }
  }

  // Each group is represented by the plane of its largest triangle.
  std::vector<int> best(static_cast<std::size_t>(n), -1);
  std::vector<double> best_area(static_cast<std::size_t>(n), -1.0);
  for (int t = 0; t < n; ++t) {
    const int g = groups.find(t);
    const double a = triangle_area(mesh.corner(t, 0), mesh.corner(t, 1), mesh.corner(t, 2));
    if (a > best_area[static_cast<std::size_t>(g)]) {
      best_area[static_cast<std::size_t>(g)] = a;
      best[static_cast<std::size_t>(g)] = t;
    }
  }
  // Offsets that are rounding noise around zero are pinned to zero so that
  // re-encoding a decoded model reproduces the same code.
  const double zero_h = 1e-12 * mesh.bounding_box_diagonal();
  PlaneSet code;
  for (int g = 0; g < n; ++g) {
    if (best[static_cast<std::size_t>(g)] >= 0) {
      OrientedPlaned p = planes[static_cast<std::size_t>(best[static_cast<std::size_t>(g)])];
      if (std::abs(p.h) <= zero_h) p.h = 0.0;
      code.planes.push_back(p);
    }
  }
  return canonical_order(std::move(code));
}

double default_decode_tolerance(const PlaneSet& code) {
  double scale = 1.0;
  for (const OrientedPlaned& p : code) scale = std::max(scale, std::abs(p.h));
  return 1e-9 * scale;
}

ConvexPolyhedron decode_convex(const PlaneSet& code) {
  return decode_convex(code, default_decode_tolerance(code));
}

ConvexPolyhedron decode_convex(const PlaneSet& code, double eps) {
  constexpr double kMaxCondition = 1e8;
  const std::size_t n = code.size();
  if (n < 4) {
    throw Error(Errc::UnboundedRegion, std::to_string(n) + " half-spaces cannot bound a region");
  }

  double scale = 1.0;
  for (const OrientedPlaned& p : code) scale = std::max(scale, std::abs(p.h));

  // The code's planes followed by a far bounding box. A region vertex on the
  // box means the half-space intersection itself is unbounded.
  const double box = 1e6 * scale;
  std::vector<Vec3> normals;
  std::vector<double> offsets;
  normals.reserve(n + 6);
  for (const OrientedPlaned& p : code) {
    normals.push_back(p.normal());
    offsets.push_back(p.h);
  }
  for (int axis = 0; axis < 3; ++axis) {
    for (double sign : {1.0, -1.0}) {
      Vec3 e = Vec3::Zero();
      e[axis] = sign;
      normals.push_back(e);
      offsets.push_back(box);
    }
  }
  const std::size_t m = normals.size();

  struct Candidate {
    Vec3 p;
    double tol;
    std::array<int, 3> planes;
  };
  std::vector<Candidate> feasible;
  std::size_t ill_conditioned = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vec3 cij = normals[i].cross(normals[j]);
      if (cij.squaredNorm() < 1e-24) continue;
      for (std::size_t k = j + 1; k < m; ++k) {
        const double det = normals[k].dot(cij);
        if (std::abs(det) < 1e-14) continue;
        const Vec3 cjk = normals[j].cross(normals[k]);
        const Vec3 cki = normals[k].cross(normals[i]);
        // Rows of the inverse are the columns cjk, cki, cij scaled by 1/det.
        const double inv_norm = (cjk.cwiseAbs() + cki.cwiseAbs() + cij.cwiseAbs()).maxCoeff() / std::abs(det);
        const double a_norm =
            std::max({normals[i].lpNorm<1>(), normals[j].lpNorm<1>(), normals[k].lpNorm<1>()});
        const double cond = a_norm * inv_norm;
        const Vec3 p = (offsets[i] * cjk + offsets[j] * cki + offsets[k] * cij) / det;
        const double tol = eps + 8.0 * cond * DBL_EPSILON * std::max(p.norm(), scale);
        bool ok = true;
        for (std::size_t q = 0; q < m && ok; ++q) {
          ok = normals[q].dot(p) - offsets[q] <= tol;
        }
        if (!ok) continue;
        // A badly conditioned solve is not trusted as a vertex, but is
        // remembered in case nothing else turns out feasible.
        if (cond > kMaxCondition) {
          if (k < n) ++ill_conditioned;
          continue;
        }
        feasible.push_back({p, tol, {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)}});
      }
    }
  }
  if (feasible.empty()) {
    if (ill_conditioned > 0) {
      throw Error(Errc::IllConditioned, std::to_string(ill_conditioned) +
                                            " feasible plane triples are too ill-conditioned to solve");
    }
    throw Error(Errc::EmptyRegion, "no point satisfies every half-space");
  }

  Eigen::AlignedBox3d bounds;
  for (const Candidate& c : feasible) bounds.extend(c.p);
  const double diag = bounds.diagonal().norm();
  const double merge_tol = std::max(1e-7 * diag, 4.0 * eps);

  // Merge triple intersections of the same vertex.
  std::sort(feasible.begin(), feasible.end(),
            [](const Candidate& a, const Candidate& b) { return a.p.x() < b.p.x(); });
  DisjointSets clusters(feasible.size());
  for (std::size_t a = 0; a < feasible.size(); ++a) {
    for (std::size_t b = a + 1; b < feasible.size(); ++b) {
      if (feasible[b].p.x() - feasible[a].p.x() > merge_tol) break;
      if ((feasible[b].p - feasible[a].p).norm() <= merge_tol) {
        clusters.unite(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  std::vector<Vec3> sums(feasible.size(), Vec3::Zero());
  std::vector<int> counts(feasible.size(), 0);
  std::vector<std::vector<int>> support(feasible.size());  // code planes meeting at each cluster
  for (std::size_t a = 0; a < feasible.size(); ++a) {
    const auto r = static_cast<std::size_t>(clusters.find(static_cast<int>(a)));
    sums[r] += feasible[a].p;
    ++counts[r];
    for (int q : feasible[a].planes) {
      if (static_cast<std::size_t>(q) < n) support[r].push_back(q);
    }
  }
  struct Corner {
    Vec3 p;
    std::vector<int> planes;
  };
  std::vector<Corner> corners;
  for (std::size_t r = 0; r < feasible.size(); ++r) {
    if (counts[r] == 0) continue;
    std::sort(support[r].begin(), support[r].end());
    support[r].erase(std::unique(support[r].begin(), support[r].end()), support[r].end());
    corners.push_back({sums[r] / counts[r], std::move(support[r])});
  }
  std::sort(corners.begin(), corners.end(), [](const Corner& a, const Corner& b) {
    return std::tie(a.p.x(), a.p.y(), a.p.z()) < std::tie(b.p.x(), b.p.y(), b.p.z());
  });
  ConvexPolyhedron poly;
  for (const Corner& c : corners) poly.vertices.push_back(c.p);

  for (const Vec3& v : poly.vertices) {
    for (std::size_t b = n; b < m; ++b) {
      if (std::abs(normals[b].dot(v) - offsets[b]) <= 1e-6 * box) {
        throw Error(Errc::UnboundedRegion, "the half-space intersection is not bounded");
      }
    }
  }
  if (poly.vertices.size() < 4) {
    throw Error(Errc::EmptyRegion, "region has no interior");
  }
  {
    const Vec3& o = poly.vertices[0];
    double extent = 0.0;
    std::size_t far = 0;
    for (std::size_t a = 1; a < poly.vertices.size(); ++a) {
      const double d = (poly.vertices[a] - o).norm();
      if (d > extent) {
        extent = d;
        far = a;
      }
    }
    const Vec3 axis = poly.vertices[far] - o;
    double best = 0.0;
    Vec3 normal = Vec3::Zero();
    for (const Vec3& v : poly.vertices) {
      const Vec3 c = axis.cross(v - o);
      if (c.norm() > best) {
        best = c.norm();
        normal = c;
      }
    }
    double thickness = 0.0;
    if (best > 0.0) {
      normal.normalize();
      for (const Vec3& v : poly.vertices) thickness = std::max(thickness, std::abs(normal.dot(v - o)));
    }
    if (best <= 1e-12 * extent * extent || thickness <= merge_tol) {
      throw Error(Errc::EmptyRegion, "region has no interior");
    }
  }

  poly.plane_face.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> ring;
    for (std::size_t v = 0; v < poly.vertices.size(); ++v) {
      // Incidence is combinatorial: the plane took part in producing the
      // vertex, or passes through it to within the decode tolerance.
      const auto& on = corners[v].planes;
      if (std::binary_search(on.begin(), on.end(), static_cast<int>(i)) ||
          std::abs(normals[i].dot(poly.vertices[v]) - offsets[i]) <= eps) {
        ring.push_back(static_cast<int>(v));
      }
    }
    const bool repeats =
        std::any_of(code.begin(), code.begin() + static_cast<std::ptrdiff_t>(i),
                    [&](const OrientedPlaned& q) { return same_plane(q, code[i], 1e-9, eps); });
    if (ring.size() < 3 || repeats) {
      poly.redundant_planes.push_back(static_cast<int>(i));
      continue;
    }
    Vec3 centroid = Vec3::Zero();
    for (int v : ring) centroid += poly.vertices[static_cast<std::size_t>(v)];
    centroid /= static_cast<double>(ring.size());
    const auto [u, w] = plane_basis(normals[i]);
    std::vector<std::pair<double, int>> by_angle;
    for (int v : ring) {
      const Vec3 d = poly.vertices[static_cast<std::size_t>(v)] - centroid;
      by_angle.emplace_back(std::atan2(d.dot(w), d.dot(u)), v);
    }
    std::sort(by_angle.begin(), by_angle.end());
    for (std::size_t a = 0; a < ring.size(); ++a) ring[a] = by_angle[a].second;

    poly.plane_face[i] = static_cast<int>(poly.faces.size());
    poly.faces.push_back(std::move(ring));
    poly.face_plane.push_back(static_cast<int>(i));
    if (face_area(poly, poly.faces.size() - 1) <= merge_tol * merge_tol) {
      poly.faces.pop_back();
      poly.face_plane.pop_back();
      poly.plane_face[i] = -1;
      poly.redundant_planes.push_back(static_cast<int>(i));
    }
  }
  return poly;
}

PlaneSet translate_planes(const PlaneSet& code, const Vec3& a) {
  PlaneSet out = code;
  for (OrientedPlaned& p : out.planes) p.h += p.normal().dot(a);
  return out;
}

PlaneSet rotate_planes(const PlaneSet& code, const Rotation& r) {
  PlaneSet out;
  out.planes.reserve(code.size());
  for (const OrientedPlaned& p : code) out.planes.push_back(OrientedPlaned::from_normal(r * p.normal(), p.h));
  return out;
}

TriangleMesh translated(const TriangleMesh& mesh, const Vec3& a) {
  std::vector<Vec3> vs = mesh.vertices();
  for (Vec3& v : vs) v += a;
  return TriangleMesh(std::move(vs), mesh.triangles());
}

TriangleMesh rotated(const TriangleMesh& mesh, const Rotation& r) {
  std::vector<Vec3> vs = mesh.vertices();
  for (Vec3& v : vs) v = r * v;
  return TriangleMesh(std::move(vs), mesh.triangles());
}

}  // namespace planecode
