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

#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "planecode/geom.hpp"
#include "planecode/mesh.hpp"

namespace planecode {

/// Ordered collection of oriented planes; a convex polyhedron is the
/// intersection of their closed negative half-spaces.
struct PlaneSet {
  std::vector<OrientedPlaned> planes;

  std::size_t size() const { return planes.size(); }
  bool empty() const { return planes.empty(); }
  const OrientedPlaned& operator[](std::size_t i) const { return planes[i]; }
  auto begin() const { return planes.begin(); }
  auto end() const { return planes.end(); }
};

/// True when two planes agree in direction (angle <= angle_tol) and offset.
bool same_plane(const OrientedPlaned& a, const OrientedPlaned& b, double angle_tol = 1e-9,
                double h_tol = 1e-9);
bool has_duplicate_planes(const PlaneSet& code, double angle_tol = 1e-9, double h_tol = 1e-9);

/// Sorts by (nu, phi, h). Angles are compared on a 1e-9 rad grid so that
/// rounding noise does not reorder planes sharing a polar angle.
PlaneSet canonical_order(PlaneSet code);

/// Vertices plus counterclockwise (seen from outside) faces.
struct ConvexPolyhedron {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> faces;
  /// Plane index that produced each face.
  std::vector<int> face_plane;
  /// Face index per plane of the code, -1 for planes that carry no face.
  std::vector<int> plane_face;
  /// Planes that support no face (redundant half-spaces). Not an error.
  std::vector<int> redundant_planes;
};

double face_area(const ConvexPolyhedron& poly, std::size_t face);
double volume(const ConvexPolyhedron& poly);
/// Fan-triangulates every face.
TriangleMesh to_triangle_mesh(const ConvexPolyhedron& poly);

/// Proper rotation about the origin.
class Rotation {
 public:
  Rotation() : m_(Eigen::Matrix3d::Identity()) {}
  /// Throws Errc::NotARotation unless R^T R = I and det R = 1 within tol.
  static Rotation from_matrix(const Eigen::Matrix3d& m, double tol = 1e-9);
  static Rotation about_axis(const Vec3& axis, double angle);

  const Eigen::Matrix3d& matrix() const { return m_; }
  Vec3 operator*(const Vec3& v) const { return m_ * v; }

 private:
  explicit Rotation(const Eigen::Matrix3d& m) : m_(m) {}
  Eigen::Matrix3d m_;
};

struct ConvexityViolation {
  int vertex;
  int triangle;
  double distance;
};

/// First vertex lying strictly above some triangle plane by more than eps.
std::optional<ConvexityViolation> find_convexity_violation(const TriangleMesh& mesh, double eps);

/// One plane per maximal coplanar group of adjacent triangles, in canonical
/// order. Throws NotClosed, NotConvex or DegenerateTriangle.
PlaneSet encode_convex(const TriangleMesh& mesh, double eps);
PlaneSet encode_convex(const TriangleMesh& mesh);

/// Half-space intersection by enumerating plane triples. eps is the absolute
/// feasibility tolerance. Throws UnboundedRegion, EmptyRegion or
/// IllConditioned.
ConvexPolyhedron decode_convex(const PlaneSet& code, double eps);
ConvexPolyhedron decode_convex(const PlaneSet& code);

/// Default feasibility tolerance: 1e-9 times the largest |h| (at least 1).
double default_decode_tolerance(const PlaneSet& code);

PlaneSet translate_planes(const PlaneSet& code, const Vec3& a);
PlaneSet rotate_planes(const PlaneSet& code, const Rotation& r);

TriangleMesh translated(const TriangleMesh& mesh, const Vec3& a);
TriangleMesh rotated(const TriangleMesh& mesh, const Rotation& r);

}  // namespace planecode
