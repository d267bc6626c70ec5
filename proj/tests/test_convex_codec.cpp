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

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "planecode/convex_codec.hpp"
#include "planecode/error.hpp"

namespace planecode {
namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no planecode::Error thrown";
  return Errc::ParseError;
}

PlaneSet box_planes(const Vec3& lo, const Vec3& hi) {
  PlaneSet s;
  for (int a = 0; a < 3; ++a) {
    Vec3 e = Vec3::Zero();
    e[a] = 1;
    s.planes.push_back(OrientedPlaned::from_normal(e, hi[a]));
    s.planes.push_back(OrientedPlaned::from_normal(-e, -lo[a]));
  }
  return s;
}

TEST(EncodeConvex, CubeMatchesDegreeTable) {
  const PlaneSet code = encode_convex(testing::unit_cube());
  ASSERT_EQ(code.size(), 6u);
  // (nu, phi, h) in degrees, one per cube face.
  const double table[6][3] = {{90, 0, 1}, {90, 90, 1}, {90, 180, 0}, {90, 270, 0}, {0, 0, 1}, {180, 0, 0}};
  for (const auto& row : table) {
    const bool found = std::any_of(code.begin(), code.end(), [&](const OrientedPlaned& p) {
      return std::abs(radians_to_degrees(p.direction.nu) - row[0]) < 1e-6 &&
             std::abs(radians_to_degrees(p.direction.phi) - row[1]) < 1e-6 && std::abs(p.h - row[2]) < 1e-12;
    });
    EXPECT_TRUE(found) << row[0] << " " << row[1] << " " << row[2];
  }
}

TEST(EncodeConvex, TetrahedronAndOrder) {
  const PlaneSet code = encode_convex(testing::tetrahedron());
  ASSERT_EQ(code.size(), 4u);
  EXPECT_EQ(canonical_order(code).planes.size(), 4u);
  for (std::size_t i = 1; i < code.size(); ++i) {
    EXPECT_LE(code[i - 1].direction.nu, code[i].direction.nu + 1e-9);
  }
}

TEST(EncodeConvex, Rejections) {
  EXPECT_EQ(code_of([] { encode_convex(testing::open_box()); }), Errc::NotClosed);
  EXPECT_EQ(code_of([] { encode_convex(testing::l_prism()); }), Errc::NotConvex);
  const auto violation = find_convexity_violation(testing::l_prism(), 1e-9);
  ASSERT_TRUE(violation.has_value());
  EXPECT_GT(violation->distance, 0.0);
}

TEST(EncodeConvex, PlaneCountNeverExceedsTriangles) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const TriangleMesh hull = testing::random_hull(rng, 20);
    EXPECT_LE(encode_convex(hull).size(), hull.num_triangles());
  }
}

TEST(DecodeConvex, CubeAgainstBruteForce) {
  const PlaneSet code = box_planes(Vec3(0, 0, 0), Vec3(1, 1, 1));
  const ConvexPolyhedron poly = decode_convex(code);
  EXPECT_EQ(poly.vertices.size(), 8u);
  ASSERT_EQ(poly.faces.size(), 6u);
  for (const auto& f : poly.faces) EXPECT_EQ(f.size(), 4u);
  EXPECT_LT(testing::hausdorff(poly.vertices, testing::brute_force_vertices(code, 1e-9)), 1e-12);
  EXPECT_NEAR(volume(poly), 1.0, 1e-12);
  EXPECT_TRUE(poly.redundant_planes.empty());
  const TriangleMesh mesh = to_triangle_mesh(poly);
  EXPECT_TRUE(mesh.closed());
  EXPECT_NEAR(testing::volume_of(mesh), 1.0, 1e-12);
}

TEST(DecodeConvex, FacesAreCounterClockwiseFromOutside) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10; ++i) {
    const PlaneSet code = encode_convex(testing::random_hull(rng, 16));
    const ConvexPolyhedron poly = decode_convex(code);
    for (std::size_t f = 0; f < poly.faces.size(); ++f) {
      const auto& ring = poly.faces[f];
      Vec3 area = Vec3::Zero();
      for (std::size_t k = 0; k < ring.size(); ++k) {
        area += poly.vertices[static_cast<std::size_t>(ring[k])].cross(
            poly.vertices[static_cast<std::size_t>(ring[(k + 1) % ring.size()])]);
      }
      EXPECT_GT(area.dot(code[static_cast<std::size_t>(poly.face_plane[f])].normal()), 0.0);
    }
  }
}

TEST(DecodeConvex, Errors) {
  PlaneSet one{{OrientedPlaned::from_normal(Vec3(0, 0, 1), 1)}};
  EXPECT_EQ(code_of([&] { decode_convex(one); }), Errc::UnboundedRegion);

  PlaneSet open = box_planes(Vec3(0, 0, 0), Vec3(1, 1, 1));
  open.planes.erase(open.planes.begin());  // drop x <= 1
  EXPECT_EQ(code_of([&] { decode_convex(open); }), Errc::UnboundedRegion);

  PlaneSet empty = box_planes(Vec3(0, 0, 0), Vec3(1, 1, 1));
  empty.planes.push_back(OrientedPlaned::from_normal(Vec3(1, 0, 0), -1));  // x <= -1
  EXPECT_EQ(code_of([&] { decode_convex(empty); }), Errc::EmptyRegion);

  PlaneSet flat = box_planes(Vec3(0, 0, 0), Vec3(1, 1, 0));
  EXPECT_EQ(code_of([&] { decode_convex(flat); }), Errc::EmptyRegion);
}

TEST(DecodeConvex, RedundantAndDuplicatePlanesAreKept) {
  PlaneSet code = box_planes(Vec3(0, 0, 0), Vec3(1, 1, 1));
  code.planes.push_back(OrientedPlaned::from_normal(Vec3(1, 1, 1), 10));  // far away
  code.planes.push_back(code[0]);                                         // duplicate
  EXPECT_TRUE(has_duplicate_planes(code));
  const ConvexPolyhedron poly = decode_convex(code);
  EXPECT_EQ(poly.vertices.size(), 8u);
  EXPECT_EQ(poly.redundant_planes.size(), 2u);
  EXPECT_EQ(poly.plane_face[6], -1);
}

TEST(DecodeConvex, ChamferedCubeHasSevenFaces) {
  const double cut = 0.25;
  const ConvexPolyhedron poly = decode_convex(testing::chamfered_cube_planes(cut));
  EXPECT_EQ(poly.faces.size(), 7u);
  EXPECT_EQ(poly.vertices.size(), 10u);
  EXPECT_NEAR(volume(poly), 1.0 - cut * cut * cut / 6.0, 1e-12);
  EXPECT_NEAR(face_area(poly, static_cast<std::size_t>(poly.plane_face[6])), std::sqrt(3.0) / 2.0 * cut * cut,
              1e-12);
}

TEST(DecodeConvex, RandomHullRoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const TriangleMesh hull = testing::random_hull(rng, 8 + i * 2);
    const PlaneSet code = encode_convex(hull);
    const ConvexPolyhedron poly = decode_convex(code);
    const double diag = hull.bounding_box_diagonal();
    EXPECT_LT(testing::hausdorff(poly.vertices, testing::used_vertices(hull)), 1e-6 * diag);
    EXPECT_LT(testing::hausdorff(poly.vertices, testing::brute_force_vertices(code, 1e-9)), 1e-6 * diag);
  }
}

TEST(Transform, TranslationShiftsOffsets) {
  const PlaneSet code = encode_convex(testing::unit_cube());
  const Vec3 a(0.5, -2, 3);
  const PlaneSet moved = translate_planes(code, a);
  for (std::size_t i = 0; i < code.size(); ++i) {
    EXPECT_DOUBLE_EQ(moved[i].h, code[i].h + code[i].normal().dot(a));
    EXPECT_EQ(moved[i].direction.nu, code[i].direction.nu);
  }
  const PlaneSet direct = encode_convex(translated(testing::unit_cube(), a));
  for (std::size_t i = 0; i < code.size(); ++i) EXPECT_NEAR(direct[i].h, moved[i].h, 1e-12);
}

TEST(Transform, RotationKeepsOffsets) {
  const Rotation r = Rotation::about_axis(Vec3(1, 2, 3), 0.7);
  const PlaneSet code = encode_convex(testing::tetrahedron());
  const PlaneSet turned = rotate_planes(code, r);
  for (std::size_t i = 0; i < code.size(); ++i) {
    EXPECT_DOUBLE_EQ(turned[i].h, code[i].h);
    EXPECT_LT((turned[i].normal() - r * code[i].normal()).norm(), 1e-14);
  }
}

TEST(Transform, RotationValidation) {
  Eigen::Matrix3d mirror = Eigen::Matrix3d::Identity();
  mirror(0, 0) = -1;
  EXPECT_EQ(code_of([&] { Rotation::from_matrix(mirror); }), Errc::NotARotation);
  EXPECT_EQ(code_of([&] { Rotation::from_matrix(2 * Eigen::Matrix3d::Identity()); }), Errc::NotARotation);
  EXPECT_NO_THROW(Rotation::from_matrix(Rotation::about_axis(Vec3(0, 0, 1), 1.0).matrix()));
}

TEST(CanonicalOrder, IndependentOfInputOrder) {
  std::mt19937_64 rng(9);
  const PlaneSet code = encode_convex(testing::random_hull(rng, 30));
  PlaneSet shuffled = code;
  std::shuffle(shuffled.planes.begin(), shuffled.planes.end(), rng);
  const PlaneSet a = canonical_order(shuffled);
  ASSERT_EQ(a.size(), code.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].direction.nu, code[i].direction.nu);
    EXPECT_EQ(a[i].direction.phi, code[i].direction.phi);
    EXPECT_EQ(a[i].h, code[i].h);
  }
}

}  // namespace
}  // namespace planecode
